//! Witnessed-universe class semantics under a concrete horizon.
//!
//! A σ-class is a countable union of decidable stages `A_n`; membership
//! `x ∈ A` means some stage below the horizon witnesses it. A π-class is a
//! countable intersection; membership fails as soon as one stage refutes
//! it. A finite witness budget can therefore *confirm* a σ-membership and
//! *refute* a π-membership, but never the converse — the remaining cases
//! sit beyond the horizon, and [`Verdict`] makes that third outcome a
//! value instead of a contradiction.
//!
//! The same machinery hosts the sorites cut: `feasible(n)` is definitely
//! `In` below the soft bound, definitely `Out` at the hard bound, and
//! `BeyondHorizon` across the vague band in between — induction for the
//! vague predicate degrades at the band instead of stepping sharply from
//! `In` to `Out`.

use std::fmt;
use std::sync::Arc;

use num_traits::Signed;
use thiserror::Error;

use crate::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HorizonError {
    #[error("invalid horizon band: need 0 < soft < hard, got soft={soft} hard={hard}")]
    InvalidBand { soft: u64, hard: u64 },
    #[error("unknown class family {0:?}")]
    UnknownFamily(String),
    #[error("bad threshold parameter {given:?}: {msg}")]
    BadThreshold { given: String, msg: String },
    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
}

/// Witness budget with a vague band: definite verdicts stop at
/// `soft`, everything at or past `hard` is definitely out, and the band
/// `[soft, hard)` is beyond the horizon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Horizon {
    soft: u64,
    hard: u64,
}

impl Horizon {
    pub fn new(soft: u64, hard: u64) -> Result<Self, HorizonError> {
        if soft == 0 || soft >= hard {
            return Err(HorizonError::InvalidBand { soft, hard });
        }
        Ok(Horizon { soft, hard })
    }

    pub fn soft(&self) -> u64 {
        self.soft
    }

    pub fn hard(&self) -> u64 {
        self.hard
    }

    /// Same band start with twice the hard budget (refinement tests).
    pub fn doubled(&self) -> Horizon {
        Horizon {
            soft: self.soft,
            hard: self.hard.saturating_mul(2),
        }
    }
}

/// Three-valued membership outcome at a finite witness budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    In,
    Out,
    BeyondHorizon,
}

impl Verdict {
    pub fn is_definite(&self) -> bool {
        !matches!(self, Verdict::BeyondHorizon)
    }

    /// Rank with `In` strongest and `Out` weakest; feasibility verdicts
    /// never increase along n.
    pub fn strength(&self) -> u8 {
        match self {
            Verdict::In => 2,
            Verdict::BeyondHorizon => 1,
            Verdict::Out => 0,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::In => write!(f, "In"),
            Verdict::Out => write!(f, "Out"),
            Verdict::BeyondHorizon => write!(f, "BeyondHorizon"),
        }
    }
}

/// Verdict plus the stage index that decided it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    /// σ only: some stage below the budget contains the element.
    In { witness: u64 },
    /// π only: some stage below the budget excludes the element.
    Out { counterexample: u64 },
    BeyondHorizon,
}

impl Membership {
    pub fn verdict(&self) -> Verdict {
        match self {
            Membership::In { .. } => Verdict::In,
            Membership::Out { .. } => Verdict::Out,
            Membership::BeyondHorizon => Verdict::BeyondHorizon,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Sigma,
    Pi,
}

type Generator<E> = Arc<dyn Fn(u64, &E) -> bool + Send + Sync>;

/// An indexed decidable stage family generating a σ-class or π-class.
///
/// The generator must be pure: same `(n, x)`, same answer.
pub struct ClassFamily<E> {
    kind: FamilyKind,
    domain: String,
    generator: Generator<E>,
}

impl<E> Clone for ClassFamily<E> {
    fn clone(&self) -> Self {
        ClassFamily {
            kind: self.kind,
            domain: self.domain.clone(),
            generator: Arc::clone(&self.generator),
        }
    }
}

impl<E> fmt::Debug for ClassFamily<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClassFamily")
            .field("kind", &self.kind)
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

impl<E: 'static> ClassFamily<E> {
    pub fn new(
        kind: FamilyKind,
        domain: impl Into<String>,
        generator: impl Fn(u64, &E) -> bool + Send + Sync + 'static,
    ) -> Self {
        ClassFamily {
            kind,
            domain: domain.into(),
            generator: Arc::new(generator),
        }
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn domain(&self) -> &str {
        &self.domain
    }

    /// Evaluates one stage.
    pub fn stage(&self, n: u64, x: &E) -> bool {
        (self.generator)(n, x)
    }

    /// The complementary class: σ↔π with the generator negated pointwise.
    /// Double complement restores the original verdicts exactly.
    pub fn complement(&self) -> Self {
        let inner = Arc::clone(&self.generator);
        ClassFamily {
            kind: match self.kind {
                FamilyKind::Sigma => FamilyKind::Pi,
                FamilyKind::Pi => FamilyKind::Sigma,
            },
            domain: format!("not({})", self.domain),
            generator: Arc::new(move |n, x| !inner(n, x)),
        }
    }

    /// Three-valued membership at budget `h`.
    ///
    /// σ: `In` with the least witness stage, else `BeyondHorizon` — a
    /// finite scan never refutes an existential over all standard indices.
    /// π: `Out` with the least counterexample stage, else `BeyondHorizon`
    /// — a finite scan never confirms a universal.
    pub fn membership(&self, x: &E, h: Horizon) -> Membership {
        match self.kind {
            FamilyKind::Sigma => (0..h.hard())
                .find(|&n| self.stage(n, x))
                .map_or(Membership::BeyondHorizon, |n| Membership::In { witness: n }),
            FamilyKind::Pi => (0..h.hard())
                .find(|&n| !self.stage(n, x))
                .map_or(Membership::BeyondHorizon, |n| Membership::Out {
                    counterexample: n,
                }),
        }
    }

    /// Operational semiset test: inside the bounding set, does membership
    /// leave at least one element undecided? Returns the first
    /// `BeyondHorizon` witness. A family whose members are all decided
    /// within the budget behaves as a set here, not a semiset.
    pub fn semiset_witness<'a>(&self, bounding_set: &'a [E], h: Horizon) -> Option<&'a E> {
        bounding_set
            .iter()
            .find(|x| self.membership(x, h).verdict() == Verdict::BeyondHorizon)
    }
}

/// Soritical feasibility cut: `In` below the soft bound, `Out` at or past
/// the hard bound, `BeyondHorizon` across the band. There is never an
/// `In` immediately followed by an `Out`.
pub fn feasible(n: u64, h: Horizon) -> Verdict {
    if n < h.soft() {
        Verdict::In
    } else if n >= h.hard() {
        Verdict::Out
    } else {
        Verdict::BeyondHorizon
    }
}

/// Built-in families over exact rationals, addressable by name:
/// `feasible` (σ, stages `x < n`), `infinitesimal-band` (π, stages
/// `|x| < 1/n`), and `threshold:<c>` (σ, constant stage `x < c`).
pub fn builtin_family(name: &str) -> Result<ClassFamily<Rat>, HorizonError> {
    if name == "feasible" {
        return Ok(ClassFamily::new(FamilyKind::Sigma, "x < n", |n, x: &Rat| {
            *x < Rat::from_integer(n.into())
        }));
    }
    if name == "infinitesimal-band" {
        // stage 0 imposes no constraint (no 1/0 bound to test against)
        return Ok(ClassFamily::new(
            FamilyKind::Pi,
            "|x| < 1/n",
            |n, x: &Rat| n == 0 || x.abs() < Rat::new(1.into(), n.into()),
        ));
    }
    if let Some(c) = name.strip_prefix("threshold:") {
        let cut = crate::text::parse_rat(c).map_err(|e| HorizonError::BadThreshold {
            given: c.to_string(),
            msg: e.to_string(),
        })?;
        return Ok(ClassFamily::new(
            FamilyKind::Sigma,
            format!("x < {cut}"),
            move |_, x: &Rat| *x < cut,
        ));
    }
    Err(HorizonError::UnknownFamily(name.to_string()))
}

/// Parsed `key=value` horizon configuration (`horizon.soft`,
/// `horizon.hard`). Unknown keys are rejected, not ignored.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HorizonConfig {
    pub soft: Option<u64>,
    pub hard: Option<u64>,
}

pub fn parse_config(text: &str) -> Result<HorizonConfig, HorizonError> {
    let mut config = HorizonConfig::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(HorizonError::Config {
                line: i + 1,
                msg: "expected key=value".into(),
            });
        };
        let parsed = value.trim().parse::<u64>().map_err(|e| HorizonError::Config {
            line: i + 1,
            msg: format!("bad value {:?}: {e}", value.trim()),
        })?;
        match key.trim() {
            "horizon.soft" => config.soft = Some(parsed),
            "horizon.hard" => config.hard = Some(parsed),
            other => {
                return Err(HorizonError::Config {
                    line: i + 1,
                    msg: format!("unknown key {other:?}"),
                })
            }
        }
    }
    Ok(config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn h(soft: u64, hard: u64) -> Horizon {
        Horizon::new(soft, hard).unwrap()
    }

    #[test]
    fn horizon_band_validation() {
        assert!(Horizon::new(0, 10).is_err());
        assert!(Horizon::new(10, 10).is_err());
        assert!(Horizon::new(11, 10).is_err());
        assert!(Horizon::new(1, 2).is_ok());
    }

    #[test]
    fn sigma_membership() {
        let fam = builtin_family("feasible").unwrap();
        assert_eq!(
            fam.membership(&rat(3, 1), h(10, 100)),
            Membership::In { witness: 4 }
        );
        // no witness below the horizon: the existential stays open
        assert_eq!(
            fam.membership(&rat(1_000_000_000, 1), h(10, 100)),
            Membership::BeyondHorizon
        );
        let never = ClassFamily::new(FamilyKind::Sigma, "false", |_, _: &Rat| false);
        assert_eq!(never.membership(&rat(0, 1), h(10, 100)), Membership::BeyondHorizon);
    }

    #[test]
    fn pi_membership() {
        let fam = builtin_family("infinitesimal-band").unwrap();
        // 1/2 < 1/n already fails at n = 2 under strict comparison
        assert_eq!(
            fam.membership(&rat(1, 2), h(10, 100)),
            Membership::Out { counterexample: 2 }
        );
        // no finite counterexample for 0
        assert_eq!(fam.membership(&rat(0, 1), h(10, 100)), Membership::BeyondHorizon);
    }

    #[test]
    fn complement_duality() {
        let fam = builtin_family("feasible").unwrap();
        let co = fam.complement();
        assert_eq!(co.kind(), FamilyKind::Pi);
        for x in [rat(3, 1), rat(500, 1), rat(-7, 2)] {
            let direct = fam.membership(&x, h(10, 100));
            let dual = co.membership(&x, h(10, 100));
            match direct.verdict() {
                Verdict::In => assert_eq!(dual.verdict(), Verdict::Out),
                Verdict::BeyondHorizon => assert_eq!(dual.verdict(), Verdict::BeyondHorizon),
                Verdict::Out => unreachable!("σ never reports Out"),
            }
            // double complement restores the exact membership
            assert_eq!(fam.complement().complement().membership(&x, h(10, 100)), direct);
        }
    }

    #[test]
    fn feasibility_cut_scan() {
        let hor = h(5, 9);
        let verdicts: Vec<Verdict> = (0..=9).map(|n| feasible(n, hor)).collect();
        assert_eq!(verdicts[0], Verdict::In, "0 is small, surely");
        let ins = verdicts.iter().filter(|v| **v == Verdict::In).count();
        let band = verdicts
            .iter()
            .filter(|v| **v == Verdict::BeyondHorizon)
            .count();
        let outs = verdicts.iter().filter(|v| **v == Verdict::Out).count();
        assert_eq!((ins, band, outs), (5, 4, 1));
        // antitone, and no sharp In -> Out step
        for w in verdicts.windows(2) {
            assert!(w[0].strength() >= w[1].strength());
            assert!(!(w[0] == Verdict::In && w[1] == Verdict::Out));
        }
        assert_eq!(feasible(9, hor), Verdict::Out);
    }

    #[test]
    fn semiset_detection() {
        let hor = h(5, 9);
        let cut = ClassFamily::new(FamilyKind::Sigma, "m < n", |n, m: &u64| m < &n);
        let bounding: Vec<u64> = (0..=9).collect();
        // elements near the hard bound stay undecided: a vague zone inside
        // a set, the signature of a proper semiset
        let witness = cut.semiset_witness(&bounding, hor).copied();
        assert_eq!(witness, Some(8));

        let decided = ClassFamily::new(FamilyKind::Sigma, "true", |_, _: &u64| true);
        assert_eq!(decided.semiset_witness(&bounding, hor), None);

        let band = builtin_family("infinitesimal-band").unwrap();
        let zero = [rat(0, 1)];
        assert_eq!(band.semiset_witness(&zero, hor), Some(&zero[0]));
    }

    #[test]
    fn budget_refinement_never_flips_definite_verdicts() {
        let fam = builtin_family("feasible").unwrap();
        let hor = h(10, 50);
        for x in (0..200).map(|i| rat(i, 1)) {
            let small = fam.membership(&x, hor).verdict();
            let large = fam.membership(&x, hor.doubled()).verdict();
            if small.is_definite() {
                assert_eq!(small, large);
            }
        }
    }

    #[test]
    fn registry_and_config() {
        assert!(builtin_family("no-such").is_err());
        let th = builtin_family("threshold:3/2").unwrap();
        assert_eq!(
            th.membership(&rat(1, 1), h(1, 2)).verdict(),
            Verdict::In
        );
        assert_eq!(
            th.membership(&rat(2, 1), h(1, 2)).verdict(),
            Verdict::BeyondHorizon
        );
        assert!(builtin_family("threshold:x").is_err());

        let cfg = parse_config("# comment\nhorizon.hard=10000\nhorizon.soft=1000\n\n").unwrap();
        assert_eq!(cfg.soft, Some(1000));
        assert_eq!(cfg.hard, Some(10000));
        assert!(parse_config("horizon.depth=3").is_err());
        assert!(parse_config("horizon.soft=abc").is_err());
        assert!(parse_config("horizon.soft").is_err());
    }
}
