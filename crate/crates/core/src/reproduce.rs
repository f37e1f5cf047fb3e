//! The acceptance criteria as runnable checks. Each returns one outcome with
//! a pass flag, a one-line detail and its wall time; the CLI `reproduce`
//! command and the `acceptance` test target both drive these.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog;
use crate::decomp::{
    Clause, SharpResult, SharpTable, enumerate_nested_decompositions, is_nested, validate_decomposition,
};
use crate::error::Result;
use crate::mstrip::{MStripSpec, build_mstrip, c3n_diagram, closed_forms, count_mstrip_thm, verify_recursions};
use crate::nested_det::{corollary_count, theorem_lhs, theorem_rhs, verify_identity};
use crate::paths::{BijectionReport, verify_bijection};
use crate::shapes::{SkewShape, connected_shapes, skew_shapes};
use crate::tableaux::{count_syt_aitken, count_syt_bruteforce, schur_direct, schur_jacobi_trudi};

/// Largest shapes in the decomposition sweep.
pub const SWEEP_MAX_BOXES: usize = 10;
/// Most strips per decomposition in the sweep.
pub const SWEEP_MAX_STRIPS: usize = 3;
/// Variables used for the identity in the sweep.
pub const SWEEP_NVARS: usize = 3;
/// Largest shapes for the Schur oracle comparison, and its variable counts.
pub const SCHUR_MAX_BOXES: usize = 8;
pub const SCHUR_MAX_NVARS: usize = 4;
/// Largest shapes for the Aitken oracle comparison.
pub const AITKEN_MAX_BOXES: usize = 10;
/// Largest shapes, and largest entry, in the path bijection suite.
pub const BIJECTION_MAX_BOXES: usize = 6;
pub const BIJECTION_MAX_ENTRY: u32 = 4;
/// Largest m-strip diagrams compared with brute force.
pub const MSTRIP_MAX_BOXES: usize = 16;
pub const RECURSION_MAX_N: u32 = 6;

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
    pub seconds: f64,
    pub budget_seconds: f64,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {} [{}] {} ({:.2}s of {:.0}s): {}",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.title,
            self.seconds,
            self.budget_seconds,
            self.detail
        )
    }
}

type Check = fn() -> Result<(bool, String)>;

const CRITERIA: [(u8, &str, u64, Check); 7] = [
    (1, "sharp segments of the running decomposition", 1, running_sharps),
    (2, "Schur identity on the running decomposition", 120, running_identity),
    (3, "sweep of nested decompositions", 900, decomposition_sweep),
    (4, "Jacobi-Trudi and Aitken oracles", 600, oracles),
    (5, "tableau and lattice path bijections", 600, bijections),
    (6, "m-strip counts, closed forms and recursions", 600, mstrip_numerics),
    (7, "negative controls", 120, negative_controls),
];

pub fn criterion_ids() -> impl Iterator<Item = u8> {
    CRITERIA.iter().map(|c| c.0)
}

/// Run one criterion. An error inside the check counts as a failure. A
/// check that finishes over its time budget also fails.
pub fn run_criterion(id: u8) -> Option<Outcome> {
    let &(id, title, budget, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let t = Instant::now();
    let (pass, detail) = check().unwrap_or_else(|e| (false, format!("error: {e}")));
    let elapsed = t.elapsed();
    let budget = Duration::from_secs(budget);
    let (pass, detail) = if elapsed > budget {
        (false, format!("{detail}; over the time budget"))
    } else {
        (pass, detail)
    };
    Some(Outcome {
        id,
        title,
        pass,
        detail,
        seconds: elapsed.as_secs_f64(),
        budget_seconds: budget.as_secs_f64(),
    })
}

pub fn run_all() -> Vec<Outcome> {
    criterion_ids().filter_map(run_criterion).collect()
}

fn running_sharps() -> Result<(bool, String)> {
    let d = catalog::running_decomposition();
    let shape = |l: &[u32], m: &[u32]| SkewShape::from_parts(l, m).map(Some);
    let expected = [
        (0, 1, shape(&[5, 5, 5, 4, 4], &[4, 3, 3, 2])?),
        (0, 2, shape(&[4, 4, 4, 3, 3, 1], &[3, 2, 2, 1])?),
        (1, 0, shape(&[2, 2], &[])?),
        (1, 2, shape(&[4, 4, 3, 3, 1], &[2, 2, 1])?),
        (2, 0, Some(SkewShape::empty())),
        (2, 1, shape(&[4, 4], &[2])?),
    ];
    let table = SharpTable::new(&d)?;
    let mut bad = Vec::new();
    for (i, j, want) in expected {
        let got = table.sharp(i, j)?;
        let empty_ok = want.as_ref().is_some_and(SkewShape::is_empty) == (got == SharpResult::Empty);
        if got.shape() != want || !empty_ok {
            bad.push(format!("{}#{}", i + 1, j + 1));
        }
    }
    let corners: Vec<String> = d.shared_corners().iter().map(|s| s.cell.to_string()).collect();
    Ok((
        bad.is_empty(),
        format!(
            "6 segments checked, shared cells {}, mismatches {:?}",
            corners.join(" "),
            bad
        ),
    ))
}

fn running_identity() -> Result<(bool, String)> {
    let d = catalog::running_decomposition();
    let mut parts = Vec::new();
    let mut pass = d.r() == 3;
    for nvars in 2..=4 {
        let lhs = theorem_lhs(&d, nvars)?;
        let equal = lhs == theorem_rhs(&d, nvars)?;
        pass &= equal;
        parts.push(format!("nvars {nvars}: {} terms, equal {equal}", lhs.num_terms()));
    }
    Ok((pass, format!("r = {}; {}", d.r(), parts.join("; "))))
}

#[derive(Default)]
struct Tally {
    decompositions: usize,
    failures: Vec<String>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.decompositions += other.decompositions;
        self.failures.extend(other.failures);
        self
    }
}

fn decomposition_sweep() -> Result<(bool, String)> {
    let shapes = connected_shapes(SWEEP_MAX_BOXES);
    let tally = shapes
        .par_iter()
        .map(|s| {
            let mut t = Tally::default();
            let oracle = count_syt_bruteforce(&s.cells());
            for d in enumerate_nested_decompositions(s, SWEEP_MAX_STRIPS) {
                t.decompositions += 1;
                let count_ok = corollary_count(&d).is_ok_and(|c| c == oracle);
                let identity_ok = verify_identity(&d, SWEEP_NVARS).is_ok_and(|r| r.equal);
                if !(count_ok && identity_ok) {
                    t.failures.push(format!(
                        "{:?} strips {:?}",
                        s,
                        d.strips().iter().map(|x| x.cells().to_pairs()).collect::<Vec<_>>()
                    ));
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    Ok((
        tally.failures.is_empty() && tally.decompositions > 0,
        format!(
            "{} shapes up to {} boxes, {} decompositions with at most {} strips, {} failures{}",
            shapes.len(),
            SWEEP_MAX_BOXES,
            tally.decompositions,
            SWEEP_MAX_STRIPS,
            tally.failures.len(),
            tally
                .failures
                .first()
                .map(|f| format!(", first {f}"))
                .unwrap_or_default()
        ),
    ))
}

fn oracles() -> Result<(bool, String)> {
    let small = skew_shapes(SCHUR_MAX_BOXES);
    let schur_bad: Vec<String> = small
        .par_iter()
        .flat_map_iter(|s| {
            (1..=SCHUR_MAX_NVARS)
                .filter(move |&k| schur_direct(s, k) != schur_jacobi_trudi(s, k))
                .map(move |k| format!("{s:?} nvars {k}"))
        })
        .collect();
    let large = skew_shapes(AITKEN_MAX_BOXES);
    let aitken_bad: Vec<String> = large
        .par_iter()
        .filter(|s| count_syt_aitken(s).ok() != Some(count_syt_bruteforce(&s.cells())))
        .map(|s| format!("{s:?}"))
        .collect();
    Ok((
        schur_bad.is_empty() && aitken_bad.is_empty(),
        format!(
            "Schur: {} shapes up to {} boxes, 1..={} variables, {} mismatches; Aitken: {} shapes up to {} boxes, {} mismatches",
            small.len(),
            SCHUR_MAX_BOXES,
            SCHUR_MAX_NVARS,
            schur_bad.len(),
            large.len(),
            AITKEN_MAX_BOXES,
            aitken_bad.len()
        ),
    ))
}

fn bijections() -> Result<(bool, String)> {
    let shapes = connected_shapes(BIJECTION_MAX_BOXES);
    let mut decomps: Vec<_> = shapes
        .iter()
        .flat_map(|s| enumerate_nested_decompositions(s, SWEEP_MAX_STRIPS))
        .collect();
    decomps.push(catalog::running_decomposition());
    let reports: Vec<BijectionReport> = decomps
        .par_iter()
        .map(|d| verify_bijection(d, BIJECTION_MAX_ENTRY))
        .collect::<Result<_>>()?;
    let mut total = BijectionReport::default();
    for r in reports {
        total.absorb(r);
    }
    Ok((
        total.ok(),
        format!(
            "{} decompositions (shapes up to {} boxes and the running one), entries up to {}: {} segments, {} segment tableaux, {} shape tableaux, {} strip combinations, {} failures",
            decomps.len(),
            BIJECTION_MAX_BOXES,
            BIJECTION_MAX_ENTRY,
            total.segments,
            total.segment_tableaux,
            total.shape_tableaux,
            total.combinations,
            total.failures.len()
        ),
    ))
}

/// Every m-strip parameter set with `2 ≤ m ≤ 7`, heads and tails of size at most 3
/// and at most `⌊m/2⌋` parts, at least `⌊m/2⌋` columns, and at most
/// `max_boxes` boxes.
pub fn mstrip_corpus(max_boxes: usize) -> Vec<MStripSpec> {
    let parts: [&[u32]; 7] = [&[], &[1], &[2], &[1, 1], &[3], &[2, 1], &[1, 1, 1]];
    let mut out = Vec::new();
    for m in 2..=7u32 {
        let k = (m / 2) as usize;
        for n in (k as u32).max(1)..=8 {
            for h in parts.iter().filter(|p| p.len() <= k) {
                for t in parts.iter().filter(|p| p.len() <= k) {
                    let Ok(spec) = MStripSpec::new(m, n, h, t) else {
                        continue;
                    };
                    if build_mstrip(&spec).is_ok_and(|s| s.size() <= max_boxes) {
                        out.push(spec);
                    }
                }
            }
        }
    }
    out
}

fn mstrip_numerics() -> Result<(bool, String)> {
    let corpus = mstrip_corpus(MSTRIP_MAX_BOXES);
    let thm_bad: Vec<String> = corpus
        .par_iter()
        .filter(|spec| {
            let brute = build_mstrip(spec).map(|s| count_syt_bruteforce(&s.cells()));
            !matches!((count_mstrip_thm(spec), brute), (Ok(a), Ok(b)) if a == b)
        })
        .map(|spec| format!("{spec:?}"))
        .collect();
    let mut closed_bad = Vec::new();
    let (mut closed_checked, mut closed_brute) = (0, 0);
    for n in 1..=6u32 {
        let c = closed_forms(n)?;
        let spec = |m: u32, h: &[u32], t: &[u32]| MStripSpec::new(m, n, h, t);
        let mut cases = vec![
            ("3-strip", c.three_plain.clone(), Some(spec(3, &[], &[])?)),
            ("3-strip with head", c.three_head.clone(), Some(spec(3, &[1], &[])?)),
            (
                "3-strip with head and tail",
                c.three_both.clone(),
                Some(spec(3, &[1], &[1])?),
            ),
            ("capped 3-strip", c.three_capped.clone(), None),
        ];
        if n <= 4 {
            cases.push(("4-strip", c.four_plain.clone(), Some(spec(4, &[], &[])?)));
            cases.push((
                "4-strip with head and tail",
                c.four_both.clone(),
                Some(spec(4, &[1], &[1])?),
            ));
        }
        if let Some(v) = c.five_plain.as_ref().filter(|_| n <= 4) {
            cases.push(("5-strip", v.clone(), Some(spec(5, &[], &[])?)));
        }
        for (name, closed, spec) in cases {
            closed_checked += 1;
            let (shape, det) = match &spec {
                Some(s) => {
                    let shape = build_mstrip(s)?;
                    // Too few columns for the determinant: fall back to Aitken.
                    let det = match count_mstrip_thm(s) {
                        Ok(v) => v,
                        Err(_) => count_syt_aitken(&shape)?,
                    };
                    (shape, det)
                }
                None => {
                    let s = c3n_diagram(n)?;
                    let a = count_syt_aitken(&s)?;
                    (s, a)
                }
            };
            let mut ok = closed == det;
            if shape.size() <= MSTRIP_MAX_BOXES {
                closed_brute += 1;
                ok &= closed == count_syt_bruteforce(&shape.cells());
            }
            if !ok {
                closed_bad.push(format!("{name} at n = {n}"));
            }
        }
    }
    let recursions = verify_recursions(RECURSION_MAX_N)?;
    let rec_bad = recursions.iter().filter(|r| !r.pass).count();
    Ok((
        thm_bad.is_empty() && closed_bad.is_empty() && rec_bad == 0,
        format!(
            "{} diagrams up to {} boxes: determinant = brute force, {} mismatches; {} closed-form values ({} also by brute force), {} mismatches; {} recursion instances up to n = {}, {} failures",
            corpus.len(),
            MSTRIP_MAX_BOXES,
            thm_bad.len(),
            closed_checked,
            closed_brute,
            closed_bad.len(),
            recursions.len(),
            RECURSION_MAX_N,
            rec_bad
        ),
    ))
}

fn negative_controls() -> Result<(bool, String)> {
    let start = validate_decomposition(&catalog::interior_start_decomposition());
    let end = validate_decomposition(&catalog::interior_end_decomposition());
    let start_ok = start.as_ref().is_err_and(|v| v.clause == Clause::StartOffPerimeter);
    let end_ok = end.as_ref().is_err_and(|v| v.clause == Clause::EndOffPerimeter);
    let frozen = catalog::non_nested_decompositions();
    let non_nested = frozen
        .iter()
        .filter(|d| validate_decomposition(d).is_ok() && !is_nested(d))
        .count();
    let corrupted = verify_identity(&catalog::corrupted_running_decomposition(), 3)?;
    Ok((
        start_ok && end_ok && non_nested == frozen.len() && !frozen.is_empty() && !corrupted.equal,
        format!(
            "interior start rejected {start_ok}, interior end rejected {end_ok}, {non_nested} of {} valid decompositions with the six shared cells reported non-nested, corrupted decomposition equal = {} ({})",
            frozen.len(),
            corrupted.equal,
            corrupted.defect.as_deref().unwrap_or("no defect")
        ),
    ))
}
