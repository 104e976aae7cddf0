//! Exact piecewise-linear action of `F_k` on the line.
//!
//! The circle `[0,1)` is cut into `2k+1` equal arcs `1', a'_1..a'_k,
//! A'_k..A'_1`. The base map `s_0` contracts `[0, 2k/(2k+1))` by `1/(2k)`
//! and expands the last arc by `2k`; the generators are its conjugates by
//! rotation, `s_i(x) = s_0(x + (i-1)/(2k+1)) + i/(2k+1)`. Each map is lifted
//! to the line with `s_i(0)` in `(0, 1)` and commutes with `x -> x + 1`.
//!
//! Everything here is exact rational arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::words::{Letter, Rank, ReducedWord};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("a map needs at least one piece")]
    NoPieces,
    #[error("breakpoints and slopes differ in length")]
    LengthMismatch,
    #[error("first breakpoint must be 0")]
    FirstBreakpointNotZero,
    #[error("breakpoints must be strictly increasing inside [0, 1)")]
    BadBreakpoints,
    #[error("slopes must be positive")]
    NonPositiveSlope,
    #[error("map does not commute with unit translation (one period maps to length {0})")]
    NotDegreeOne(Rational),
    #[error("anchor {0} outside (-1, 1)")]
    AnchorOutOfRange(Rational),
    #[error("generator index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: u32, rank: u32 },
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn frac_part(x: &Rational) -> Rational {
    x - x.floor()
}

/// A piecewise-linear increasing map of the line with `f(x + 1) = f(x) + 1`.
///
/// Stored on the fundamental domain `[0, 1)`: breakpoints start at 0,
/// adjacent slopes differ (pieces with equal slope are merged), and
/// `anchor = f(0)`. Two maps are equal iff their stored data are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlMap {
    breakpoints: Vec<Rational>,
    slopes: Vec<Rational>,
    anchor: Rational,
    // f at each breakpoint
    values: Vec<Rational>,
}

impl PlMap {
    pub fn new(
        breakpoints: Vec<Rational>,
        slopes: Vec<Rational>,
        anchor: Rational,
    ) -> Result<Self, ActionError> {
        if breakpoints.is_empty() {
            return Err(ActionError::NoPieces);
        }
        if breakpoints.len() != slopes.len() {
            return Err(ActionError::LengthMismatch);
        }
        if !breakpoints[0].is_zero() {
            return Err(ActionError::FirstBreakpointNotZero);
        }
        let one = Rational::one();
        if breakpoints.windows(2).any(|p| p[0] >= p[1]) || breakpoints.last().unwrap() >= &one {
            return Err(ActionError::BadBreakpoints);
        }
        if slopes.iter().any(|s| !s.is_positive()) {
            return Err(ActionError::NonPositiveSlope);
        }
        if anchor <= -&one || anchor >= one {
            return Err(ActionError::AnchorOutOfRange(anchor));
        }

        let mut bps = Vec::with_capacity(breakpoints.len());
        let mut ss: Vec<Rational> = Vec::with_capacity(slopes.len());
        for (b, s) in breakpoints.into_iter().zip(slopes) {
            if ss.last() != Some(&s) {
                bps.push(b);
                ss.push(s);
            }
        }

        let mut values = Vec::with_capacity(bps.len());
        let mut acc = anchor.clone();
        for j in 0..bps.len() {
            values.push(acc.clone());
            let end = bps.get(j + 1).cloned().unwrap_or_else(Rational::one);
            acc += &ss[j] * (end - &bps[j]);
        }
        let period = &acc - &anchor;
        if !period.is_one() {
            return Err(ActionError::NotDegreeOne(period));
        }

        Ok(PlMap { breakpoints: bps, slopes: ss, anchor, values })
    }

    pub fn identity() -> Self {
        PlMap::new(vec![Rational::zero()], vec![Rational::one()], Rational::zero()).unwrap()
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn slopes(&self) -> &[Rational] {
        &self.slopes
    }

    /// `f(0)`.
    pub fn anchor(&self) -> &Rational {
        &self.anchor
    }

    fn piece_of(&self, t: &Rational) -> usize {
        self.breakpoints.partition_point(|b| b <= t) - 1
    }

    pub fn apply(&self, x: &Rational) -> Rational {
        let n = x.floor();
        let t = x - &n;
        let j = self.piece_of(&t);
        &self.values[j] + &self.slopes[j] * (t - &self.breakpoints[j]) + n
    }

    /// Solves `f(x) = y`.
    pub fn apply_inverse(&self, y: &Rational) -> Rational {
        let n = (y - &self.anchor).floor();
        let t = y - &n;
        let j = self.values.partition_point(|v| v <= &t) - 1;
        &self.breakpoints[j] + (t - &self.values[j]) / &self.slopes[j] + n
    }

    /// Slope of the piece containing `x` (right derivative).
    pub fn slope_at(&self, x: &Rational) -> &Rational {
        &self.slopes[self.piece_of(&frac_part(x))]
    }

    /// `x -> f(x + shift) + offset`.
    pub fn conjugate_shift(&self, shift: &Rational, offset: &Rational) -> Result<Self, ActionError> {
        let mut bps: Vec<Rational> = std::iter::once(Rational::zero())
            .chain(self.breakpoints.iter().map(|b| frac_part(&(b - shift))))
            .collect();
        bps.sort();
        bps.dedup();
        let slopes = bps.iter().map(|b| self.slope_at(&(b + shift)).clone()).collect();
        PlMap::new(bps, slopes, self.apply(shift) + offset)
    }

    /// The functional inverse; breakpoints are the images of this map's.
    pub fn inverse(&self) -> Self {
        let mut bps: Vec<Rational> = std::iter::once(Rational::zero())
            .chain(self.values.iter().map(frac_part))
            .collect();
        bps.sort();
        bps.dedup();
        let slopes = bps
            .iter()
            .map(|y| self.slope_at(&self.apply_inverse(y)).recip())
            .collect();
        PlMap::new(bps, slopes, self.apply_inverse(&Rational::zero()))
            .expect("inverse of a valid map is valid")
    }
}

pub fn apply_map(f: &PlMap, x: &Rational) -> Rational {
    f.apply(x)
}

pub fn invert_map(f: &PlMap) -> PlMap {
    f.inverse()
}

/// `s_0(x) = x/(2k)` on `[0, 2k/(2k+1))`, `2k x - (2k-1)` on the last arc.
pub fn build_s0(rank: Rank) -> PlMap {
    let two_k = 2 * rank.get() as i64;
    PlMap::new(
        vec![Rational::zero(), rat(two_k, two_k + 1)],
        vec![rat(1, two_k), int(two_k)],
        Rational::zero(),
    )
    .expect("s_0 is a valid map")
}

/// Lift of `s_i` with `s_i(0)` in `(0, 1)`.
pub fn build_generator(rank: Rank, i: u32) -> Result<PlMap, ActionError> {
    if i == 0 || i > rank.get() {
        return Err(ActionError::IndexOutOfRange { index: i, rank: rank.get() });
    }
    let n = 2 * rank.get() as i64 + 1;
    let i = i as i64;
    build_s0(rank).conjugate_shift(&rat(i - 1, n), &rat(i, n))
}

/// The generator maps and their inverses for one rank.
#[derive(Debug, Clone)]
pub struct FreeAction {
    rank: Rank,
    positive: Vec<PlMap>,
    negative: Vec<PlMap>,
}

impl FreeAction {
    pub fn new(rank: Rank) -> Self {
        let positive: Vec<PlMap> = (1..=rank.get())
            .map(|i| build_generator(rank, i).expect("index in range"))
            .collect();
        let negative = positive.iter().map(PlMap::inverse).collect();
        FreeAction { rank, positive, negative }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn map(&self, letter: Letter) -> &PlMap {
        let idx = letter.index() as usize - 1;
        if letter.is_positive() {
            &self.positive[idx]
        } else {
            &self.negative[idx]
        }
    }

    /// Left action: the last letter acts first.
    pub fn apply_word(&self, u: &ReducedWord, x: &Rational) -> Rational {
        u.letters()
            .iter()
            .rev()
            .fold(x.clone(), |acc, &l| self.map(l).apply(&acc))
    }

    pub fn orbit_zero(&self, u: &ReducedWord) -> Rational {
        self.apply_word(u, &Rational::zero())
    }
}

/// `u(0)`. Builds the generator maps on every call; reuse a [`FreeAction`]
/// when evaluating many words.
pub fn orbit_zero(u: &ReducedWord, rank: Rank) -> Rational {
    FreeAction::new(rank).orbit_zero(u)
}

/// A half-open arc `[lo, hi)` of the circle, given on the line with
/// `0 <= lo < 1` and `lo < hi <= lo + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span {
    pub lo: Rational,
    pub hi: Rational,
}

impl Span {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        let n = lo.floor();
        Span { lo: lo - &n, hi: hi - n }
    }

    /// The rest of the circle, `[hi, lo + 1)`.
    pub fn complement(&self) -> Span {
        Span::new(self.hi.clone(), &self.lo + Rational::one())
    }

    pub fn len(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Whether `other` lies inside this arc on the circle.
    pub fn contains(&self, other: &Span) -> bool {
        let shift = (&other.lo - &self.lo).floor();
        other.hi.clone() - shift <= self.hi
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{})", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcLabel {
    /// `1'`, the arc at 0.
    Base,
    /// `a'_i`, attracting arc of `s_i`.
    Positive(u32),
    /// `A'_i`, attracting arc of `S_i`.
    Negative(u32),
}

impl fmt::Display for ArcLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ArcLabel::Base => f.write_str("1'"),
            ArcLabel::Positive(i) if i <= 26 => write!(f, "{}'", (b'a' + (i - 1) as u8) as char),
            ArcLabel::Negative(i) if i <= 26 => write!(f, "{}'", (b'A' + (i - 1) as u8) as char),
            ArcLabel::Positive(i) => write!(f, "s{i}'"),
            ArcLabel::Negative(i) => write!(f, "S{i}'"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub label: ArcLabel,
    pub span: Span,
}

impl Arc {
    pub fn new(rank: Rank, label: ArcLabel) -> Self {
        let n = 2 * rank.get() as i64 + 1;
        let slot = match label {
            ArcLabel::Base => 0,
            ArcLabel::Positive(i) => i as i64,
            ArcLabel::Negative(i) => n - i as i64,
        };
        Arc { label, span: Span::new(rat(slot, n), rat(slot + 1, n)) }
    }

    /// Attracting arc of `letter`'s map.
    pub fn attracting(rank: Rank, letter: Letter) -> Self {
        let label = if letter.is_positive() {
            ArcLabel::Positive(letter.index())
        } else {
            ArcLabel::Negative(letter.index())
        };
        Arc::new(rank, label)
    }
}

/// The `2k+1` arcs in circle order: `1', a'_1, .., a'_k, A'_k, .., A'_1`.
pub fn partition(rank: Rank) -> Vec<Arc> {
    let k = rank.get();
    std::iter::once(ArcLabel::Base)
        .chain((1..=k).map(ArcLabel::Positive))
        .chain((1..=k).rev().map(ArcLabel::Negative))
        .map(|l| Arc::new(rank, l))
        .collect()
}

/// Image of the arc under the circle map of `f`, as a [`Span`].
pub fn arc_image(f: &PlMap, arc: &Span) -> Span {
    Span::new(f.apply(&arc.lo), f.apply(&arc.hi))
}

#[derive(Debug, Clone)]
pub struct InclusionCheck {
    pub letter: Letter,
    /// Complement of the inverse letter's attracting arc.
    pub domain: Span,
    pub image: Span,
    pub target: Arc,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct PingPongReport {
    pub rank: Rank,
    pub checks: Vec<InclusionCheck>,
}

impl PingPongReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

impl fmt::Display for PingPongReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let passed = self.checks.iter().filter(|c| c.holds).count();
        writeln!(f, "k={} inclusions={} passed={}", self.rank, self.checks.len(), passed)?;
        for c in &self.checks {
            let name = ReducedWord::from_reduced(vec![c.letter]).unwrap();
            writeln!(
                f,
                "{} {} -> {} in {} {} {}",
                name.display(self.rank),
                c.domain,
                c.image,
                c.target.label,
                c.target.span,
                if c.holds { "ok" } else { "FAIL" }
            )?;
        }
        Ok(())
    }
}

/// Checks `s_i(S^1 \ A'_i) ⊆ a'_i` and `S_i(S^1 \ a'_i) ⊆ A'_i` for every `i`.
pub fn verify_pingpong(rank: Rank) -> PingPongReport {
    let action = FreeAction::new(rank);
    let checks = rank
        .letters()
        .map(|letter| {
            let domain = Arc::attracting(rank, letter.inverse()).span.complement();
            let image = arc_image(action.map(letter), &domain);
            let target = Arc::attracting(rank, letter);
            let holds = target.span.contains(&image);
            InclusionCheck { letter, domain, image, target, holds }
        })
        .collect();
    PingPongReport { rank, checks }
}
