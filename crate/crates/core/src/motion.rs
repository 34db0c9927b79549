//! Continuity and observability of sampled motions; the halving walk.
//!
//! A motion is a finite sampled function from a time continuum to a space
//! continuum, each carrying its own indiscernibility. It is *continuous*
//! when indiscernible times map to indiscernible points (nothing jumps
//! within an instant) and *observable* when indiscernible images come only
//! from indiscernible times (a tree's growth is continuous but not
//! observable). Both checks are exhaustive over sample pairs: with
//! non-transitive relations there is no sound shortcut.
//!
//! [`zeno_dichotomy`] runs the halving walk: starting one unit from the
//! goal and halving each step, the remaining distance enters the goal's
//! monad after finitely many steps — the walk ends at the witnessed scale.

use num_traits::{One, Signed};
use thiserror::Error;

use crate::continuum::{Coordinate, ContinuumError, IndiscernibilitySpec, Point};
use crate::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MotionError {
    #[error("need at least two samples, found {found}")]
    TooFewSamples { found: usize },
    #[error("sample times must be strictly increasing (index {index})")]
    NonIncreasingTimes { index: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("trace file line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Continuum(#[from] ContinuumError),
}

/// A sampled motion: strictly increasing times, uniform point dimension,
/// and the two indiscernibility relations it is judged against.
#[derive(Clone, Debug)]
pub struct MotionTrace<C> {
    samples: Vec<(C, Point<C>)>,
    time_spec: IndiscernibilitySpec<C>,
    space_spec: IndiscernibilitySpec<C>,
}

/// Outcome of a pair check: either the property holds or the first
/// violating sample pair in time order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MotionCheck {
    Holds,
    Violated { first: usize, second: usize },
}

impl MotionCheck {
    pub fn holds(&self) -> bool {
        matches!(self, MotionCheck::Holds)
    }
}

impl<C: Coordinate> MotionTrace<C> {
    pub fn new(
        samples: Vec<(C, Point<C>)>,
        time_spec: IndiscernibilitySpec<C>,
        space_spec: IndiscernibilitySpec<C>,
    ) -> Result<Self, MotionError> {
        for (i, pair) in samples.windows(2).enumerate() {
            if pair[1].0 <= pair[0].0 {
                return Err(MotionError::NonIncreasingTimes { index: i + 1 });
            }
        }
        if let Some((_, first)) = samples.first() {
            if let Some(bad) = samples.iter().find(|(_, p)| p.dim() != first.dim()) {
                return Err(ContinuumError::DimensionMismatch {
                    expected: first.dim(),
                    found: bad.1.dim(),
                }
                .into());
            }
        }
        Ok(MotionTrace {
            samples,
            time_spec,
            space_spec,
        })
    }

    pub fn samples(&self) -> &[(C, Point<C>)] {
        &self.samples
    }

    fn times_indiscernible(&self, i: usize, j: usize) -> Result<bool, MotionError> {
        let a = Point::scalar(self.samples[i].0.clone());
        let b = Point::scalar(self.samples[j].0.clone());
        Ok(self.time_spec.indiscernible(&a, &b)?)
    }

    fn points_indiscernible(&self, i: usize, j: usize) -> Result<bool, MotionError> {
        Ok(self
            .space_spec
            .indiscernible(&self.samples[i].1, &self.samples[j].1)?)
    }

    /// Continuity: indiscernible times must have indiscernible images.
    /// All sample pairs are checked; the witness is the first violating
    /// pair in time order.
    pub fn check_continuous(&self) -> Result<MotionCheck, MotionError> {
        self.pair_check(|trace, i, j| {
            Ok(!trace.times_indiscernible(i, j)? || trace.points_indiscernible(i, j)?)
        })
    }

    /// Observability: indiscernible images must come from indiscernible
    /// times — discernibly different times must be visibly different.
    pub fn check_observable(&self) -> Result<MotionCheck, MotionError> {
        self.pair_check(|trace, i, j| {
            Ok(!trace.points_indiscernible(i, j)? || trace.times_indiscernible(i, j)?)
        })
    }

    fn pair_check(
        &self,
        ok: impl Fn(&Self, usize, usize) -> Result<bool, MotionError>,
    ) -> Result<MotionCheck, MotionError> {
        let n = self.samples.len();
        if n < 2 {
            return Err(MotionError::TooFewSamples { found: n });
        }
        for i in 0..n {
            for j in i + 1..n {
                if !ok(self, i, j)? {
                    return Ok(MotionCheck::Violated { first: i, second: j });
                }
            }
        }
        Ok(MotionCheck::Holds)
    }
}

/// Result of the halving walk: the first step count whose remaining
/// distance is inside the goal's monad, and that distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZenoResult {
    pub steps: u64,
    pub final_distance: Rat,
}

/// Walks from distance `start` toward the goal, scaling the remaining
/// distance by `ratio` each step, and returns the least `n ≥ 1` with
/// `start·ratioⁿ < theta` (strictly): after finitely many steps the
/// remaining distance is indiscernible from the endpoint at the witnessed
/// scale `theta`.
pub fn zeno_dichotomy(theta: &Rat, start: &Rat, ratio: &Rat) -> Result<ZenoResult, MotionError> {
    if !theta.is_positive() {
        return Err(MotionError::InvalidParameter("theta must be positive"));
    }
    if !start.is_positive() {
        return Err(MotionError::InvalidParameter("start must be positive"));
    }
    if !ratio.is_positive() || *ratio >= Rat::one() {
        return Err(MotionError::InvalidParameter("ratio must satisfy 0 < ratio < 1"));
    }
    let mut distance = start.clone();
    let mut steps = 0u64;
    loop {
        distance *= ratio;
        steps += 1;
        if distance < *theta {
            return Ok(ZenoResult {
                steps,
                final_distance: distance,
            });
        }
    }
}

/// Parses a trace file: header `t,x1,...,xn`, then one sample per line of
/// exact rationals or decimals. Comment (`#`) and blank lines are ignored.
pub fn parse_trace_samples(text: &str) -> Result<Vec<(Rat, Point<Rat>)>, MotionError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let Some((header_line, header)) = lines.next() else {
        return Err(MotionError::Parse {
            line: 1,
            msg: "missing header line".into(),
        });
    };
    let cols: Vec<&str> = header.split(',').map(str::trim).collect();
    if cols.len() < 2 || cols[0] != "t" {
        return Err(MotionError::Parse {
            line: header_line,
            msg: format!("expected header t,x1,...,xn, found {header:?}"),
        });
    }
    for (i, col) in cols[1..].iter().enumerate() {
        if *col != format!("x{}", i + 1) {
            return Err(MotionError::Parse {
                line: header_line,
                msg: format!("expected column x{}, found {col:?}", i + 1),
            });
        }
    }
    let dim = cols.len() - 1;
    let mut samples = Vec::new();
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != dim + 1 {
            return Err(MotionError::Parse {
                line: line_no,
                msg: format!("expected {} fields, found {}", dim + 1, fields.len()),
            });
        }
        let mut values = fields.iter().map(|f| {
            crate::text::parse_rat(f).map_err(|e| MotionError::Parse {
                line: line_no,
                msg: e.to_string(),
            })
        });
        let t = values.next().expect("at least two fields")?;
        let coords = values.collect::<Result<Vec<_>, _>>()?;
        samples.push((t, Point::new(coords)));
    }
    Ok(samples)
}
