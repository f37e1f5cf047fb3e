//! Both sides of the Schur determinant identity for nested decompositions,
//! and the standard-tableau count it specializes to.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::decomp::{Decomposition, SharpResult, SharpTable, is_nested, validate_decomposition};
use crate::error::{Error, Result};
use crate::polynomial::{ExactRational, Polynomial, determinant, determinant_rational, factorial, power_sum_p1r};
use crate::shapes::SkewShape;
use crate::tableaux::{count_syt_aitken, count_syt_bruteforce, schur_cached};

/// Shapes up to this size get their strip-determinant count checked against brute
/// force. Override with the `SKEWDET_MAX_ORACLE_BOXES` environment variable.
pub const DEFAULT_MAX_ORACLE_BOXES: usize = 12;

pub fn max_oracle_boxes() -> usize {
    std::env::var("SKEWDET_MAX_ORACLE_BOXES")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_ORACLE_BOXES)
}

fn require_nested(d: &Decomposition) -> Result<SharpTable> {
    validate_decomposition(d).map_err(|v| Error::InvalidDecomposition(v.to_string()))?;
    SharpTable::new(d)
}

fn overlap_count(d: &Decomposition) -> Result<u32> {
    u32::try_from(d.r()).map_err(|_| Error::Internal("strips cover less than the shape".into()))
}

/// `(x1 + ... + xn)^r` times the Schur polynomial of the shape.
pub fn theorem_lhs(d: &Decomposition, nvars: usize) -> Result<Polynomial> {
    require_nested(d)?;
    Ok(&power_sum_p1r(overlap_count(d)?, nvars) * &schur_cached(d.shape(), nvars))
}

/// Determinant of the Schur polynomials of the pairwise `#` segments.
pub fn theorem_rhs(d: &Decomposition, nvars: usize) -> Result<Polynomial> {
    let table = require_nested(d)?;
    rhs_from_table(&table, d.len(), nvars)
}

fn rhs_from_table(table: &SharpTable, g: usize, nvars: usize) -> Result<Polynomial> {
    if g == 0 {
        return Ok(Polynomial::one(nvars));
    }
    let mut m = Vec::with_capacity(g);
    for i in 0..g {
        let mut row = Vec::with_capacity(g);
        for j in 0..g {
            let entry = match table.sharp(i, j)? {
                SharpResult::Undefined => Polynomial::zero(nvars),
                SharpResult::Empty => Polynomial::one(nvars),
                SharpResult::Defined(cells) => schur_cached(&SkewShape::from_cells(&cells)?, nvars),
            };
            row.push(entry);
        }
        m.push(row);
    }
    determinant(&m)
}

/// `N! det[f(segment) / |segment|!]`, checked to be an integer and, for
/// small shapes, checked against brute force.
pub fn corollary_count(d: &Decomposition) -> Result<BigInt> {
    let table = require_nested(d)?;
    let g = d.len();
    let mut m = vec![vec![ExactRational::zero(); g]; g];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = match table.sharp(i, j)? {
                SharpResult::Undefined => ExactRational::zero(),
                SharpResult::Empty => ExactRational::one(),
                SharpResult::Defined(cells) => {
                    let s = SkewShape::from_cells(&cells)?;
                    ExactRational::new(count_syt_aitken(&s)?, factorial(s.size() as u32))
                }
            };
        }
    }
    let n = d.shape().size();
    let value = determinant_rational(&m)? * ExactRational::from_integer(factorial(n as u32));
    if !value.denom().is_one() {
        return Err(Error::Internal(format!(
            "strip determinant count is not an integer: {value}"
        )));
    }
    let count = value.numer().clone();
    if n <= max_oracle_boxes() {
        let oracle = count_syt_bruteforce(&d.shape().cells());
        if oracle != count {
            return Err(Error::Internal(format!(
                "strip determinant gives {count}, brute force {oracle}"
            )));
        }
    }
    Ok(count)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub lhs: Polynomial,
    /// Absent when the decomposition is not valid and nested.
    pub rhs: Option<Polynomial>,
    pub equal: bool,
    pub r: i64,
    pub g: usize,
    pub nvars: usize,
    pub degree: usize,
    pub label: &'static str,
    /// Why the right-hand side could not be formed.
    pub defect: Option<String>,
}

impl IdentityReport {
    /// Runs with at least as many variables as the degree decide the
    /// identity for the shape; fewer only check consistency.
    pub fn label_for(nvars: usize, degree: usize) -> &'static str {
        if nvars >= degree {
            "conclusive for this shape"
        } else {
            "consistency check"
        }
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    equal: bool,
    r: i64,
    g: usize,
    nvars: usize,
    degree: usize,
    label: &'a str,
    defect: Option<&'a str>,
    lhs: Vec<crate::polynomial::JsonTerm>,
    rhs: Option<Vec<crate::polynomial::JsonTerm>>,
}

impl Serialize for IdentityReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ReportJson {
            equal: self.equal,
            r: self.r,
            g: self.g,
            nvars: self.nvars,
            degree: self.degree,
            label: self.label,
            defect: self.defect.as_deref(),
            lhs: self.lhs.to_json_terms(),
            rhs: self.rhs.as_ref().map(Polynomial::to_json_terms),
        }
        .serialize(s)
    }
}

/// Evaluate both sides. A decomposition that is invalid or not nested gets
/// a report with `equal = false` and the reason in `defect`; the left side
/// is then the Schur polynomial scaled by the power sum of the overlap.
pub fn verify_identity(d: &Decomposition, nvars: usize) -> Result<IdentityReport> {
    if nvars == 0 {
        return Err(Error::OutOfRange("at least one variable is needed".into()));
    }
    let r = d.r();
    let degree = (d.shape().size() as i64 + r.max(0)) as usize;
    let label = IdentityReport::label_for(nvars, degree);
    let defect = match validate_decomposition(d) {
        Err(v) => Some(format!("invalid decomposition: {v}")),
        Ok(()) if !is_nested(d) => Some("decomposition is not nested".to_string()),
        Ok(()) => None,
    };
    let base = schur_cached(d.shape(), nvars);
    let lhs = &power_sum_p1r(r.max(0) as u32, nvars) * &base;
    let (rhs, defect) = match defect {
        Some(msg) => (None, Some(msg)),
        None => match SharpTable::new(d).and_then(|t| rhs_from_table(&t, d.len(), nvars)) {
            Ok(p) => (Some(p), None),
            Err(e) => (None, Some(e.to_string())),
        },
    };
    let equal = rhs.as_ref() == Some(&lhs);
    Ok(IdentityReport {
        lhs,
        rhs,
        equal,
        r,
        g: d.len(),
        nvars,
        degree,
        label,
        defect,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{Decomposition, peel_rim};
    use crate::shapes::Cell;
    use crate::tableaux::schur_jacobi_trudi;

    fn shape(l: &[u32], m: &[u32]) -> SkewShape {
        SkewShape::from_parts(l, m).unwrap()
    }

    #[test]
    fn single_strip_reduces_to_schur() {
        let s = shape(&[3, 2], &[1]);
        let d = Decomposition::new(s.clone(), vec![s.cells()]).unwrap();
        assert_eq!(theorem_lhs(&d, 3).unwrap(), schur_jacobi_trudi(&s, 3));
        assert_eq!(theorem_rhs(&d, 3).unwrap(), schur_jacobi_trudi(&s, 3));
        let one = shape(&[1], &[]);
        let d = Decomposition::new(one.clone(), vec![one.cells()]).unwrap();
        assert_eq!(corollary_count(&d).unwrap(), BigInt::one());
    }

    #[test]
    fn empty_shape() {
        let d = Decomposition::new(SkewShape::empty(), vec![]).unwrap();
        assert_eq!(theorem_lhs(&d, 2).unwrap(), Polynomial::one(2));
        assert_eq!(theorem_rhs(&d, 2).unwrap(), Polynomial::one(2));
    }

    #[test]
    fn rim_decomposition_of_a_wide_shape() {
        let d = peel_rim(&shape(&[8, 6, 6, 2, 1], &[3, 2])).unwrap();
        let rep = verify_identity(&d, 3).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.r, 0);
        assert_eq!(rep.label, "consistency check");
    }

    #[test]
    fn corrupted_decomposition_reports_defect() {
        let s = shape(&[2, 2], &[]);
        let d = Decomposition::new(
            s,
            vec![
                [Cell::new(1, 1), Cell::new(1, 2)].into_iter().collect(),
                [Cell::new(2, 2)].into_iter().collect(),
            ],
        )
        .unwrap();
        let rep = verify_identity(&d, 2).unwrap();
        assert!(!rep.equal);
        assert!(rep.rhs.is_none());
        assert!(rep.defect.unwrap().contains("invalid"));
        assert!(theorem_rhs(&d, 2).is_err());
    }

    #[test]
    fn labels() {
        assert_eq!(IdentityReport::label_for(3, 5), "consistency check");
        assert_eq!(IdentityReport::label_for(5, 5), "conclusive for this shape");
    }
}
