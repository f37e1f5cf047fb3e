//! Exact multivariate polynomials over the integers, and determinants over
//! polynomials and rationals.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{BuildHasherDefault, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type ExactRational = BigRational;

/// Matrices up to this size use cofactor expansion; larger ones use
/// fraction-free elimination.
pub const COFACTOR_MAX: usize = 6;

/// Multiplicative hash for packed exponent keys.
#[derive(Default)]
struct PackedHasher(u64);

impl Hasher for PackedHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.write_u64(b as u64);
        }
    }

    fn write_u64(&mut self, k: u64) {
        self.0 = (self.0 ^ k).wrapping_mul(0x9e37_79b9_7f4a_7c15).rotate_left(29);
    }
}

/// An exponent vector, ordered by total degree and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    /// The variable `x_{i+1}` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Polynomial::monomial(Monomial(e), BigInt::one())
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Self {
        let mut p = Polynomial::zero(m.0.len());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Result<Self> {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::VariableMismatch(nvars, e.len()));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the leading one down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::VariableMismatch(self.nvars, other.nvars))
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.packed_mul(other).unwrap_or_else(|| self.general_mul(other)))
    }

    fn general_mul(&self, other: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// Product with exponents packed eight bits apiece into a `u64` and
    /// machine-word coefficients. `None` when either does not fit.
    fn packed_mul(&self, other: &Polynomial) -> Option<Polynomial> {
        let nvars = self.nvars;
        let top = |p: &Polynomial| p.terms.keys().flat_map(|m| m.0.iter().copied()).max().unwrap_or(0);
        if nvars > 8 || top(self) + top(other) > u8::MAX as u32 {
            return None;
        }
        let pack = |m: &Monomial| m.0.iter().fold(0u64, |k, &e| (k << 8) | e as u64);
        let small = |p: &Polynomial| -> Option<Vec<(u64, i128)>> {
            p.terms
                .iter()
                .map(|(m, c)| Some((pack(m), i64::try_from(c).ok()? as i128)))
                .collect()
        };
        let (a, b) = (small(self)?, small(other)?);
        let mut acc: HashMap<u64, i128, BuildHasherDefault<PackedHasher>> =
            HashMap::with_capacity_and_hasher(a.len() * b.len(), Default::default());
        for &(ka, ca) in &a {
            for &(kb, cb) in &b {
                let slot = acc.entry(ka + kb).or_default();
                *slot = slot.checked_add(ca * cb)?;
            }
        }
        let unpack = |k: u64| Monomial((0..nvars).rev().map(|i| ((k >> (8 * i)) & 0xff) as u32).collect());
        // (degree, packed key) is the monomial order, so the map below is built
        // from one sorted run.
        let degree = |k: u64| (0..nvars).map(|i| (k >> (8 * i)) & 0xff).sum::<u64>();
        let mut out: Vec<(u64, u64, i128)> = acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(k, c)| (degree(k), k, c))
            .collect();
        out.sort_unstable();
        let terms = out.into_iter().map(|(_, k, c)| (unpack(k), BigInt::from(c))).collect();
        Some(Polynomial { nvars, terms })
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect();
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        if self.nvars != d.nvars {
            return None;
        }
        let (dm, dc) = d.leading()?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(dm)?;
            let (qc, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            let t = Polynomial::monomial(qm, qc);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Substitute `x_i -> x_{perm[i]}` (0-based).
    pub fn permute_vars(&self, perm: &[usize]) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; self.nvars];
            for (i, &k) in m.0.iter().enumerate() {
                e[perm[i]] += k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    pub fn evaluate(&self, point: &[BigInt]) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
            })
            .sum()
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms()
            .map(|(m, c)| JsonTerm {
                exps: m.0.clone(),
                coef: c.to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(nvars: usize, terms: &[JsonTerm]) -> Result<Polynomial> {
        let parsed = terms
            .iter()
            .map(|t| {
                t.coef
                    .parse::<BigInt>()
                    .map(|c| (t.exps.clone(), c))
                    .map_err(|e| Error::Parse(e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(nvars, parsed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub exps: Vec<u32>,
    pub coef: String,
}

impl fmt::Display for Polynomial {
    /// Graded-lex order, leading term first, e.g. `x1^2 + 2*x1*x2 - x2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("x{}^{e}", i + 1)
                        }
                    })
                    .collect();
            let mag = c.abs();
            let body = match (vars.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => vars.join("*"),
                (false, false) => format!("{mag}*{}", vars.join("*")),
            };
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials over different variable sets")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials over different variable sets")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials over different variable sets")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&BigInt::from(-1))
    }
}

pub fn poly_add(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.checked_add(b)
}

pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.checked_mul(b)
}

/// `(x1 + ... + x_nvars)^r`.
pub fn power_sum_p1r(r: u32, nvars: usize) -> Polynomial {
    let mut p1 = Polynomial::zero(nvars);
    for i in 0..nvars {
        p1 = &p1 + &Polynomial::var(nvars, i);
    }
    p1.pow(r)
}

fn square_nvars(m: &[Vec<Polynomial>]) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::NotSquare);
    }
    let nvars = m
        .first()
        .and_then(|r| r.first())
        .map(Polynomial::nvars)
        .ok_or_else(|| Error::OutOfRange("empty polynomial matrix".into()))?;
    for p in m.iter().flatten() {
        if p.nvars() != nvars {
            return Err(Error::VariableMismatch(nvars, p.nvars()));
        }
    }
    Ok(nvars)
}

/// Exact determinant. Cofactor expansion up to `COFACTOR_MAX`, fraction-free
/// elimination above.
pub fn determinant(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    if m.len() <= COFACTOR_MAX {
        determinant_cofactor(m)
    } else {
        determinant_bareiss(m)
    }
}

/// Laplace expansion, memoized over the set of columns already used.
pub fn determinant_cofactor(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    cofactor(m, None)
}

/// Determinant of a matrix where every product of nonzero entries along a
/// permutation has degree at most `max_degree`. Partial products above the
/// bound are dropped: they can only be completed through a zero entry.
pub fn determinant_degree_bounded(m: &[Vec<Polynomial>], max_degree: u32) -> Result<Polynomial> {
    cofactor(m, Some(max_degree))
}

fn cofactor(m: &[Vec<Polynomial>], max_degree: Option<u32>) -> Result<Polynomial> {
    let nvars = square_nvars(m)?;
    let n = m.len();
    if n > 20 {
        return Err(Error::OutOfRange(format!("cofactor expansion of a {n}x{n} matrix")));
    }
    let mut dp: Vec<Option<Polynomial>> = vec![None; 1 << n];
    dp[0] = Some(Polynomial::one(nvars));
    for mask in 0usize..(1 << n) {
        let Some(cur) = dp[mask].take() else { continue };
        if mask == (1 << n) - 1 {
            dp[mask] = Some(cur);
            break;
        }
        if cur.is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        for j in 0..n {
            if mask & (1 << j) != 0 || m[row][j].is_zero() {
                continue;
            }
            if let Some(bound) = max_degree
                && cur.degree().unwrap_or(0) + m[row][j].degree().unwrap_or(0) > bound
            {
                continue;
            }
            let mut term = &cur * &m[row][j];
            if (mask >> (j + 1)).count_ones() % 2 == 1 {
                term = -&term;
            }
            let slot = &mut dp[mask | (1 << j)];
            *slot = Some(match slot.take() {
                Some(p) => &p + &term,
                None => term,
            });
        }
    }
    Ok(dp[(1 << n) - 1].take().unwrap_or_else(|| Polynomial::zero(nvars)))
}

/// Bareiss fraction-free elimination with exact polynomial division.
pub fn determinant_bareiss(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let nvars = square_nvars(m)?;
    let n = m.len();
    let mut a: Vec<Vec<Polynomial>> = m.to_vec();
    let mut prev = Polynomial::one(nvars);
    let mut negate = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(Polynomial::zero(nvars));
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .ok_or_else(|| Error::Internal("inexact division in elimination".into()))?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// Exact rational determinant by Gaussian elimination. The empty matrix has
/// determinant 1.
pub fn determinant_rational(m: &[Vec<ExactRational>]) -> Result<ExactRational> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::NotSquare);
    }
    let mut a = m.to_vec();
    let mut det = ExactRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(ExactRational::zero());
        };
        if p != k {
            a.swap(k, p);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        let (top, below) = a.split_at_mut(k + 1);
        for row in below {
            if row[k].is_zero() {
                continue;
            }
            let f = &row[k] / &pivot;
            for (x, p) in row[k..].iter_mut().zip(&top[k][k..]) {
                *x -= &f * p;
            }
        }
    }
    Ok(det)
}

fn factorial_table() -> &'static Mutex<Vec<BigInt>> {
    static TABLE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![BigInt::one()]))
}

/// `n!`, memoized across calls.
/// Serde helper writing big integers as decimal strings.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }
}

pub fn factorial(n: u32) -> BigInt {
    let mut t = factorial_table().lock().unwrap_or_else(|e| e.into_inner());
    while t.len() <= n as usize {
        let k = t.len();
        let next = &t[k - 1] * BigInt::from(k);
        t.push(next);
    }
    t[n as usize].clone()
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    factorial(n as u32) / (factorial(k as u32) * factorial((n - k) as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    fn c(n: usize, v: i64) -> Polynomial {
        Polynomial::constant(n, BigInt::from(v))
    }

    #[test]
    fn additive_inverse_and_identity() {
        let a = x(1, 0);
        assert!((&a + &(-&a)).is_zero());
        let s = &x(2, 0) + &x(2, 1);
        assert_eq!(&s * &Polynomial::one(2), s);
    }

    #[test]
    fn binomial_square() {
        let s = &x(2, 0) + &x(2, 1);
        assert_eq!((&s * &s).to_string(), "x1^2 + 2*x1*x2 + x2^2");
    }

    #[test]
    fn mismatched_variables_error() {
        assert!(matches!(
            x(1, 0).checked_add(&x(2, 0)),
            Err(Error::VariableMismatch(1, 2))
        ));
        assert!(poly_mul(&x(3, 0), &x(2, 0)).is_err());
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum_p1r(0, 3), Polynomial::one(3));
        assert_eq!(power_sum_p1r(1, 2), &x(2, 0) + &x(2, 1));
        assert_eq!(power_sum_p1r(3, 2).to_string(), "x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3");
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(&[vec![c(1, 1)]]).unwrap(), c(1, 1));
        let (a, b, cc, d) = (x(4, 0), x(4, 1), x(4, 2), x(4, 3));
        let m = vec![vec![a.clone(), b.clone()], vec![cc.clone(), d.clone()]];
        assert_eq!(determinant(&m).unwrap(), &(&a * &d) - &(&b * &cc));
        assert_eq!(determinant_bareiss(&m).unwrap(), &(&a * &d) - &(&b * &cc));
        assert!(matches!(determinant(&[vec![c(1, 1), c(1, 2)]]), Err(Error::NotSquare)));
    }

    #[test]
    fn rational_determinants() {
        let half = ExactRational::new(1.into(), 2.into());
        assert_eq!(determinant_rational(&[vec![half.clone()]]).unwrap(), half);
        let id: Vec<Vec<ExactRational>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| ExactRational::from_integer(((i == j) as i32).into()))
                    .collect()
            })
            .collect();
        assert!(determinant_rational(&id).unwrap().is_one());
        assert!(determinant_rational(&[]).unwrap().is_one());
    }

    #[test]
    fn division_recovers_factor() {
        let a = &(&x(3, 0) + &x(3, 2)) * &x(3, 1);
        let b = &(&x(3, 1) - &c(3, 2)) + &x(3, 0);
        let p = &a * &b;
        assert_eq!(p.div_exact(&b).unwrap(), a);
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert!(x(2, 0).div_exact(&x(2, 1)).is_none());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
        assert_eq!(factorial(25).to_string(), "15511210043330985984000000");
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn json_round_trip() {
        let p = &power_sum_p1r(2, 3) - &c(3, 7);
        let back = Polynomial::from_json_terms(3, &p.to_json_terms()).unwrap();
        assert_eq!(back, p);
    }

    pub(crate) fn arb_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..3, nvars), -5i64..=5), 0..5).prop_map(move |ts| {
            Polynomial::from_terms(nvars, ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))).unwrap()
        })
    }

    fn arb_matrix(n: usize, nvars: usize) -> impl Strategy<Value = Vec<Vec<Polynomial>>> {
        prop::collection::vec(prop::collection::vec(arb_poly(nvars), n), n)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_laws(a in arb_poly(3), b in arb_poly(3), cc in arb_poly(3)) {
            prop_assert_eq!(&(&a + &b) + &cc, &a + &(&b + &cc));
            prop_assert_eq!(&(&a * &b) * &cc, &a * &(&b * &cc));
            prop_assert_eq!(&a * &(&b + &cc), &(&a * &b) + &(&a * &cc));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn packed_product_matches_general(a in arb_poly(3), b in arb_poly(3), k in 0u32..70) {
            let big = &a.scale(&(BigInt::from(3).pow(k))) * &x(3, 0);
            prop_assert_eq!(a.packed_mul(&b), Some(a.general_mul(&b)));
            // Coefficients past 64 bits take the general path.
            prop_assert_eq!(&big * &b, big.general_mul(&b));
        }

        #[test]
        fn no_zero_terms_stored(a in arb_poly(2), b in arb_poly(2)) {
            let p = &(&a * &b) - &(&b * &a);
            prop_assert!(p.is_zero());
            prop_assert!((&a * &b).terms().all(|(m, cf)| !cf.is_zero() && m.exps().len() == 2));
        }

        #[test]
        fn cofactor_agrees_with_elimination(m in arb_matrix(3, 2)) {
            prop_assert_eq!(determinant_cofactor(&m).unwrap(), determinant_bareiss(&m).unwrap());
        }

        #[test]
        fn cofactor_agrees_with_elimination_4x4(m in arb_matrix(4, 1)) {
            prop_assert_eq!(determinant_cofactor(&m).unwrap(), determinant_bareiss(&m).unwrap());
        }

        #[test]
        fn equal_rows_give_zero(m in arb_matrix(3, 2)) {
            let mut m = m;
            m[2] = m[0].clone();
            prop_assert!(determinant(&m).unwrap().is_zero());
        }

        #[test]
        fn rows_are_linear(m in arb_matrix(3, 2), k in -4i64..=4, i in 0usize..3) {
            let mut scaled = m.clone();
            scaled[i] = scaled[i].iter().map(|p| p.scale(&BigInt::from(k))).collect();
            prop_assert_eq!(
                determinant(&scaled).unwrap(),
                determinant(&m).unwrap().scale(&BigInt::from(k))
            );
        }

        #[test]
        fn rational_agrees_on_integers(entries in prop::collection::vec(-6i64..=6, 16)) {
            let pm: Vec<Vec<Polynomial>> =
                entries.chunks(4).map(|r| r.iter().map(|&v| c(1, v)).collect()).collect();
            let rm: Vec<Vec<ExactRational>> = entries
                .chunks(4)
                .map(|r| r.iter().map(|&v| ExactRational::from_integer(v.into())).collect())
                .collect();
            let p = determinant(&pm).unwrap();
            let r = determinant_rational(&rm).unwrap();
            prop_assert_eq!(ExactRational::from_integer(p.coefficient(&[0])), r);
        }
    }
}
