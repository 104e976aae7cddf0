//! Ball enumeration and exhaustive checks of the weight against the action.

use std::cmp::Ordering;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::action::{FreeAction, Rational};
use crate::order::{compare, weight, HalfInt, Sign};
use crate::words::{Rank, ReducedWord};

/// All reduced words of length at most `radius`.
#[derive(Debug, Clone)]
pub struct Ball {
    pub rank: Rank,
    pub radius: usize,
    pub words: Vec<ReducedWord>,
}

impl Ball {
    /// `1 + 2k((2k-1)^r - 1)/(2k-2)`.
    pub fn expected_size(rank: Rank, radius: usize) -> u128 {
        let two_k = 2 * rank.get() as u128;
        let mut total = 1u128;
        let mut sphere = 1u128;
        for len in 1..=radius {
            sphere *= if len == 1 { two_k } else { two_k - 1 };
            total += sphere;
        }
        total
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Length first, then lexicographic in letter order.
pub fn enumerate_ball(rank: Rank, radius: usize) -> Ball {
    let letters: Vec<_> = rank.letters().collect();
    let mut words = vec![ReducedWord::empty()];
    let mut sphere_start = 0;
    for _ in 0..radius {
        let sphere_end = words.len();
        for idx in sphere_start..sphere_end {
            let last = words[idx].last();
            for &l in &letters {
                if last.is_some_and(|p| p.cancels(l)) {
                    continue;
                }
                let mut next = words[idx].letters().to_vec();
                next.push(l);
                words.push(ReducedWord::from_reduced(next).expect("extension stays reduced"));
            }
        }
        sphere_start = sphere_end;
    }
    Ball { rank, radius, words }
}

/// The ball's words in ascending left order.
pub fn sort_ball(ball: &Ball) -> Vec<ReducedWord> {
    let mut words = ball.words.clone();
    words.par_sort_by(compare);
    words
}

/// True when each word is strictly below the next.
pub fn is_strictly_increasing(words: &[ReducedWord]) -> bool {
    words.windows(2).all(|p| compare(&p[0], &p[1]) == Ordering::Less)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub word: ReducedWord,
    pub weight: HalfInt,
    pub orbit: Rational,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub rank: Rank,
    pub radius: usize,
    pub words_checked: usize,
    pub mismatches: Vec<Mismatch>,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "k={} r={} words={} mismatches={} elapsed={:.3}s",
            self.rank,
            self.radius,
            self.words_checked,
            self.mismatches.len(),
            self.elapsed.as_secs_f64()
        )?;
        for m in &self.mismatches {
            writeln!(f, "{} w={} orbit={}", m.word.display(self.rank), m.weight, m.orbit)?;
        }
        Ok(())
    }
}

/// Whether `w` matches the orbit point `x = u(0)`: the signs agree, and for a
/// nonempty word `x` is not an integer and `w = floor(x) + 1/2`.
pub fn weight_matches_orbit(u: &ReducedWord, w: HalfInt, x: &Rational) -> bool {
    let orbit_sign = Sign::of(match x.numer().sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    });
    if orbit_sign != w.sign() {
        return false;
    }
    if u.is_empty() {
        return w == HalfInt::ZERO;
    }
    if x.is_integer() {
        return false;
    }
    x.floor().to_integer() * 2 + 1 == BigInt::from(w.doubled())
}

/// Checks every word of the ball against the exact action.
pub fn verify(rank: Rank, radius: usize) -> VerifyReport {
    let start = Instant::now();
    let action = FreeAction::new(rank);
    let ball = enumerate_ball(rank, radius);
    let mismatches: Vec<Mismatch> = ball
        .words
        .par_iter()
        .filter_map(|u| {
            let w = weight(u);
            let x = action.orbit_zero(u);
            (!weight_matches_orbit(u, w, &x)).then(|| Mismatch { word: u.clone(), weight: w, orbit: x })
        })
        .collect();
    VerifyReport {
        rank,
        radius,
        words_checked: ball.len(),
        mismatches,
        elapsed: start.elapsed(),
    }
}
