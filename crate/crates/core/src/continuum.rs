//! Indiscernibility over coordinate grids: monads, figures, connectedness.
//!
//! An indiscernibility relation is reflexive and symmetric but, at
//! witnessed scale, not generally transitive: neighbouring strips of a
//! rainbow are indistinguishable while distant ones are not, and
//! [`transitivity_defect`] finds exactly such a chain. A class is
//! connected when every split leaves an indiscernible pair across the cut
//! — equivalently, when the indiscernibility graph is connected. The monad
//! of a point is everything indiscernible from it; the figure of a class
//! is the union of its monads, the shape it leaves on the horizon.
//!
//! Distances are max-coordinate (Chebyshev), so every comparison is an
//! exact scalar comparison. Witnessed modes compare against a fixed
//! positive threshold; the ideal mode asks whether the scaled difference
//! is infinitesimal, which for ω-valued coordinates is infinite nearness
//! and for standard rationals degenerates to equality.

use std::ops::{Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::{Omega, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContinuumError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty point list")]
    EmptyInput,
    #[error("indiscernibility scale must be positive")]
    NonPositiveScale,
    #[error("point file line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Coordinate scalar for indiscernibility analysis.
///
/// `is_negligible` is the "vanishing at this scale" test: exact zero for
/// witnessed scalars, infinitesimal for ω-valued ones.
pub trait Coordinate:
    Clone
    + PartialOrd
    + Zero
    + One
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn is_negligible(&self) -> bool;
}

impl Coordinate for Rat {
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}

impl Coordinate for Omega {
    fn is_negligible(&self) -> bool {
        self.is_infinitesimal()
    }
}

impl Coordinate for f64 {
    fn is_negligible(&self) -> bool {
        *self == 0.0
    }
}

impl Coordinate for f32 {
    fn is_negligible(&self) -> bool {
        *self == 0.0
    }
}

fn abs_diff<C: Coordinate>(a: &C, b: &C) -> C {
    let d = a.clone() - b.clone();
    if d < C::zero() {
        -d
    } else {
        d
    }
}

/// A coordinate tuple; every point in one analysis shares one dimension.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point<C> {
    coords: Vec<C>,
}

impl<C> Point<C> {
    /// Panics on an empty coordinate list (dimension must be ≥ 1).
    pub fn new(coords: Vec<C>) -> Self {
        assert!(!coords.is_empty(), "a point needs at least one coordinate");
        Point { coords }
    }

    /// One-dimensional point.
    pub fn scalar(c: C) -> Self {
        Point { coords: vec![c] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[C] {
        &self.coords
    }
}

/// A concrete indiscernibility relation over points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndiscernibilitySpec<C> {
    mode: Mode<C>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Mode<C> {
    /// `x ≈ y ⇔ (x − y)/d` vanishes at ideal scale.
    IdealUniform { scale: C },
    /// `x ≈ y ⇔ max|xᵢ − yᵢ| < θ`, strictly.
    WitnessedUniform { theta: C },
    /// `x ≈ y ⇔ max|xᵢ − yᵢ| / max(‖x‖, ‖y‖, 1) < ε`, strictly.
    WitnessedRelative { epsilon: C },
}

impl<C: Coordinate> IndiscernibilitySpec<C> {
    pub fn ideal_uniform(scale: C) -> Result<Self, ContinuumError> {
        Self::positive(scale).map(|scale| IndiscernibilitySpec {
            mode: Mode::IdealUniform { scale },
        })
    }

    pub fn witnessed_uniform(theta: C) -> Result<Self, ContinuumError> {
        Self::positive(theta).map(|theta| IndiscernibilitySpec {
            mode: Mode::WitnessedUniform { theta },
        })
    }

    pub fn witnessed_relative(epsilon: C) -> Result<Self, ContinuumError> {
        Self::positive(epsilon).map(|epsilon| IndiscernibilitySpec {
            mode: Mode::WitnessedRelative { epsilon },
        })
    }

    fn positive(c: C) -> Result<C, ContinuumError> {
        if c > C::zero() {
            Ok(c)
        } else {
            Err(ContinuumError::NonPositiveScale)
        }
    }

    /// Whether two points are indiscernible under this relation. The
    /// relation is reflexive and symmetric by construction.
    pub fn indiscernible(&self, x: &Point<C>, y: &Point<C>) -> Result<bool, ContinuumError> {
        if x.dim() != y.dim() {
            return Err(ContinuumError::DimensionMismatch {
                expected: x.dim(),
                found: y.dim(),
            });
        }
        let pairs = x.coords.iter().zip(y.coords.iter());
        Ok(match &self.mode {
            Mode::IdealUniform { scale } => {
                // max|xᵢ−yᵢ|/d vanishes iff every coordinate gap does
                pairs
                    .map(|(a, b)| abs_diff(a, b))
                    .all(|gap| (gap / scale.clone()).is_negligible())
            }
            Mode::WitnessedUniform { theta } => {
                pairs.map(|(a, b)| abs_diff(a, b)).all(|d| d < *theta)
            }
            Mode::WitnessedRelative { epsilon } => {
                let gap = chebyshev_gap(x, y);
                let denom = max_c(max_c(norm(x), norm(y)), C::one());
                // gap/denom < ε, multiplied through by the positive denom
                gap < epsilon.clone() * denom
            }
        })
    }
}

fn chebyshev_gap<C: Coordinate>(x: &Point<C>, y: &Point<C>) -> C {
    x.coords
        .iter()
        .zip(y.coords.iter())
        .map(|(a, b)| abs_diff(a, b))
        .fold(C::zero(), max_c)
}

fn norm<C: Coordinate>(x: &Point<C>) -> C {
    x.coords
        .iter()
        .map(|a| abs_diff(a, &C::zero()))
        .fold(C::zero(), max_c)
}

fn max_c<C: Coordinate>(a: C, b: C) -> C {
    if a < b {
        b
    } else {
        a
    }
}

/// The monad of `x` inside `space`: everything indiscernible from `x`,
/// in `space` order. Contains `x` itself whenever `x ∈ space`.
pub fn monad<C: Coordinate>(
    spec: &IndiscernibilitySpec<C>,
    x: &Point<C>,
    space: &[Point<C>],
) -> Result<Vec<Point<C>>, ContinuumError> {
    let mut out = Vec::new();
    for y in space {
        if spec.indiscernible(x, y)? {
            out.push(y.clone());
        }
    }
    Ok(out)
}

/// The figure of `xs` inside `ambient`: everything indiscernible from some
/// member of `xs`, in `ambient` order — the union of the monads of `xs`.
pub fn figure<C: Coordinate>(
    spec: &IndiscernibilitySpec<C>,
    xs: &[Point<C>],
    ambient: &[Point<C>],
) -> Result<Vec<Point<C>>, ContinuumError> {
    let mut out = Vec::new();
    for y in ambient {
        for x in xs {
            if spec.indiscernible(x, y)? {
                out.push(y.clone());
                break;
            }
        }
    }
    Ok(out)
}

/// Connectivity decision with a separating witness on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Connectivity<C> {
    Connected,
    /// A non-empty proper split with no indiscernible pair across it.
    Separated {
        part: Vec<Point<C>>,
        rest: Vec<Point<C>>,
    },
}

impl<C> Connectivity<C> {
    pub fn is_connected(&self) -> bool {
        matches!(self, Connectivity::Connected)
    }
}

/// Decides connectedness of `points`: every non-empty proper subset must
/// have an indiscernible pair crossing to its complement. Computed as
/// connectivity of the indiscernibility graph.
pub fn connectivity<C: Coordinate>(
    spec: &IndiscernibilitySpec<C>,
    points: &[Point<C>],
) -> Result<Connectivity<C>, ContinuumError> {
    if points.is_empty() {
        return Err(ContinuumError::EmptyInput);
    }
    let mut uf = UnionFind::new(points.len());
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if spec.indiscernible(&points[i], &points[j])? {
                uf.union(i, j);
            }
        }
    }
    let root = uf.find(0);
    if (1..points.len()).all(|i| uf.find(i) == root) {
        return Ok(Connectivity::Connected);
    }
    let (mut part, mut rest) = (Vec::new(), Vec::new());
    for (i, p) in points.iter().enumerate() {
        if uf.find(i) == root {
            part.push(p.clone());
        } else {
            rest.push(p.clone());
        }
    }
    Ok(Connectivity::Separated { part, rest })
}

/// A witness of non-transitivity: `x ≈ y`, `y ≈ z`, but `x ̸≈ z`.
pub type DefectChain<C> = (Point<C>, Point<C>, Point<C>);

/// Finds a chain `x ≈ y`, `y ≈ z`, `x ̸≈ z` witnessing non-transitivity,
/// or `None` if the relation is transitive on `points`. Ideal-scale
/// relations are equivalences and never produce a chain.
pub fn transitivity_defect<C: Coordinate>(
    spec: &IndiscernibilitySpec<C>,
    points: &[Point<C>],
) -> Result<Option<DefectChain<C>>, ContinuumError> {
    let n = points.len();
    let mut close = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            close[i * n + j] = spec.indiscernible(&points[i], &points[j])?;
        }
    }
    for i in 0..n {
        for k in i + 1..n {
            if close[i * n + k] {
                continue;
            }
            for j in 0..n {
                if j != i && j != k && close[i * n + j] && close[j * n + k] {
                    return Ok(Some((
                        points[i].clone(),
                        points[j].clone(),
                        points[k].clone(),
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// Parses a point-cloud file: one point per line, comma-separated exact
/// rationals or decimals; `#` lines and blank lines are ignored.
pub fn parse_points(text: &str) -> Result<Vec<Point<Rat>>, ContinuumError> {
    let mut out: Vec<Point<Rat>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut coords = Vec::new();
        for field in line.split(',') {
            let c = crate::text::parse_rat(field).map_err(|e| ContinuumError::Parse {
                line: i + 1,
                msg: e.to_string(),
            })?;
            coords.push(c);
        }
        if let Some(first) = out.first() {
            if coords.len() != first.dim() {
                return Err(ContinuumError::DimensionMismatch {
                    expected: first.dim(),
                    found: coords.len(),
                });
            }
        }
        out.push(Point::new(coords));
    }
    Ok(out)
}

/// Formats a point the way point files spell it: `3/4,-1/2`.
pub fn format_point(p: &Point<Rat>) -> String {
    p.coords()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, QPoint};

    fn p1(n: i64, d: i64) -> QPoint {
        Point::scalar(rat(n, d))
    }

    fn uniform(n: i64, d: i64) -> IndiscernibilitySpec<Rat> {
        IndiscernibilitySpec::witnessed_uniform(rat(n, d)).unwrap()
    }

    #[test]
    fn witnessed_uniform_thresholding() {
        let wide = uniform(1, 1);
        assert!(wide.indiscernible(&p1(0, 1), &p1(1, 2)).unwrap());
        let narrow = uniform(1, 100);
        assert!(!narrow.indiscernible(&p1(0, 1), &p1(1, 2)).unwrap());
        // strict: a gap equal to θ is discernible
        assert!(!wide.indiscernible(&p1(0, 1), &p1(1, 1)).unwrap());
    }

    #[test]
    fn spec_validation_and_dimensions() {
        assert_eq!(
            IndiscernibilitySpec::witnessed_uniform(rat(0, 1)).unwrap_err(),
            ContinuumError::NonPositiveScale
        );
        assert!(IndiscernibilitySpec::witnessed_relative(rat(-1, 2)).is_err());
        let spec = uniform(1, 1);
        let two = Point::new(vec![rat(0, 1), rat(0, 1)]);
        assert_eq!(
            spec.indiscernible(&p1(0, 1), &two).unwrap_err(),
            ContinuumError::DimensionMismatch { expected: 1, found: 2 }
        );
    }

    #[test]
    fn ideal_uniform_is_infinite_nearness() {
        use num_traits::One;
        let spec: IndiscernibilitySpec<Omega> =
            IndiscernibilitySpec::ideal_uniform(Omega::one()).unwrap();
        let near = Point::scalar(Omega::one() + Omega::one().checked_div(&Omega::omega()).unwrap());
        let one = Point::scalar(Omega::one());
        let two = Point::scalar(Omega::one() + Omega::one());
        assert!(spec.indiscernible(&near, &one).unwrap());
        assert!(!spec.indiscernible(&one, &two).unwrap());
        // on standard rationals the ideal relation degenerates to equality
        let std_spec: IndiscernibilitySpec<Rat> =
            IndiscernibilitySpec::ideal_uniform(rat(1, 1)).unwrap();
        assert!(std_spec.indiscernible(&p1(1, 2), &p1(1, 2)).unwrap());
        assert!(!std_spec.indiscernible(&p1(1, 2), &p1(1, 3)).unwrap());
    }

    #[test]
    fn relative_mode_scales_with_magnitude() {
        let spec = IndiscernibilitySpec::witnessed_relative(rat(1, 10)).unwrap();
        // |105 - 100| / 105 < 1/10
        assert!(spec
            .indiscernible(&p1(100, 1), &p1(105, 1))
            .unwrap());
        // same absolute gap near the origin is discernible
        assert!(!spec.indiscernible(&p1(0, 1), &p1(5, 1)).unwrap());
        // reflexive at zero thanks to the max(..., 1) guard
        assert!(spec.indiscernible(&p1(0, 1), &p1(0, 1)).unwrap());
    }

    #[test]
    fn monads_and_figures() {
        let spec = uniform(1, 1);
        let space = [p1(0, 1), p1(1, 2), p1(2, 1)];
        let m = monad(&spec, &p1(0, 1), &space).unwrap();
        assert_eq!(m, vec![p1(0, 1), p1(1, 2)]);
        let lone = [p1(7, 1)];
        assert_eq!(monad(&spec, &p1(7, 1), &lone).unwrap(), lone.to_vec());

        let fig = figure(&spec, &[p1(0, 1)], &space).unwrap();
        assert_eq!(fig, vec![p1(0, 1), p1(1, 2)]);
        // figure contains its own support
        let fig2 = figure(&spec, &space, &space).unwrap();
        assert_eq!(fig2, space.to_vec());
    }

    #[test]
    fn connectivity_and_witness() {
        let spec = IndiscernibilitySpec::witnessed_uniform(rat(6, 10)).unwrap();
        let chain = [p1(0, 1), p1(1, 2), p1(1, 1)];
        assert!(connectivity(&spec, &chain).unwrap().is_connected());

        let gap = [p1(0, 1), p1(10, 1)];
        match connectivity(&uniform(1, 1), &gap).unwrap() {
            Connectivity::Separated { part, rest } => {
                assert_eq!(part, vec![p1(0, 1)]);
                assert_eq!(rest, vec![p1(10, 1)]);
            }
            Connectivity::Connected => panic!("expected a separation"),
        }
        assert_eq!(
            connectivity(&uniform(1, 1), &[]).unwrap_err(),
            ContinuumError::EmptyInput
        );
        // single point: no non-empty proper subset exists
        assert!(connectivity(&uniform(1, 1), &[p1(0, 1)]).unwrap().is_connected());
    }

    #[test]
    fn rainbow_strip_chain() {
        let spec = uniform(1, 1);
        let strips = [p1(0, 1), p1(6, 10), p1(12, 10)];
        let (x, y, z) = transitivity_defect(&spec, &strips).unwrap().unwrap();
        assert_eq!((x, y, z), (p1(0, 1), p1(6, 10), p1(12, 10)));

        // far-apart points: no adjacent pairs at all, hence no chain
        let sparse = [p1(0, 1), p1(10, 1), p1(20, 1)];
        assert!(transitivity_defect(&spec, &sparse).unwrap().is_none());
    }

    #[test]
    fn float_coordinates_ride_the_generic_lane() {
        let spec = IndiscernibilitySpec::witnessed_uniform(0.5f64).unwrap();
        let a = Point::scalar(0.0f64);
        let b = Point::scalar(0.25f64);
        let c = Point::scalar(0.5f64);
        assert!(spec.indiscernible(&a, &b).unwrap());
        assert!(!spec.indiscernible(&a, &c).unwrap());
        assert!(connectivity(&spec, &[a, b, c]).unwrap().is_connected());
    }

    #[test]
    fn point_file_parsing() {
        let text = "# grid\n0,1\n1/2,-3/4\n0.25,2\n\n";
        let pts = parse_points(text).unwrap();
        assert_eq!(pts.len(), 3);
        assert_eq!(pts[1], Point::new(vec![rat(1, 2), rat(-3, 4)]));
        assert_eq!(pts[2], Point::new(vec![rat(1, 4), rat(2, 1)]));
        assert_eq!(format_point(&pts[1]), "1/2,-3/4");

        assert!(matches!(
            parse_points("1,2\n3\n"),
            Err(ContinuumError::DimensionMismatch { expected: 2, found: 1 })
        ));
        assert!(matches!(
            parse_points("1,x\n"),
            Err(ContinuumError::Parse { line: 1, .. })
        ));
    }
}
