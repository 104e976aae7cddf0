//! The subword-counting weight, its positive cone, and the induced left order.
//!
//! For a reduced word `u` over `s_1..s_k` the weight is
//!
//! ```text
//! w(u) = #{adjacent s_j S_i, j > i} - #{adjacent S_j s_i, j > i} + last(u)/2
//! ```
//!
//! where `last(u)` is `+1`, `-1` or `0` according to whether `u` ends in a
//! positive letter, a negative letter, or is empty. `u` is positive iff
//! `w(u) > 0`, and `u > v` iff `w(v^-1 u) > 0`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::words::{Letter, Rank, ReducedWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("stream is not reduced: letter {position} cancels its predecessor")]
    NotReduced { position: usize },
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: u32, rank: u32 },
    #[error("negative letter in a monoid word")]
    NegativeLetter,
    #[error("the variant weight is defined only for rank 2")]
    VariantNeedsRankTwo,
    #[error("cannot parse weight {0:?}")]
    BadWeight(String),
}

/// A value in `(1/2)Z`, stored doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };

    pub fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub fn doubled(self) -> i64 {
        self.doubled
    }

    pub fn sign(self) -> Sign {
        Sign::of(self.doubled)
    }

    /// `n/2` form, e.g. `3/2`, `-1/2`, `4/2`.
    pub fn as_fraction(self) -> String {
        format!("{}/2", self.doubled)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;

    fn neg(self) -> HalfInt {
        HalfInt { doubled: -self.doubled }
    }
}

/// Exact decimal: `0`, `2`, `-0.5`, `1.5`.
impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.doubled;
        if d % 2 == 0 {
            write!(f, "{}", d / 2)
        } else {
            let sign = if d < 0 { "-" } else { "" };
            write!(f, "{}{}.5", sign, d.unsigned_abs() / 2)
        }
    }
}

/// Accepts both renderings: `n/2` and decimals with an optional `.5` or `.0`.
impl FromStr for HalfInt {
    type Err = OrderError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || OrderError::BadWeight(s.to_string());
        if let Some(num) = s.strip_suffix("/2") {
            return num.parse::<i64>().map(HalfInt::from_doubled).map_err(|_| bad());
        }
        let (int_part, frac) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, "0"),
        };
        let negative = int_part.starts_with('-');
        let magnitude: i64 = int_part
            .trim_start_matches('-')
            .parse()
            .map_err(|_| bad())?;
        let half = match frac {
            "5" => 1,
            "0" => 0,
            _ => return Err(bad()),
        };
        let doubled = magnitude.checked_mul(2).and_then(|m| m.checked_add(half)).ok_or_else(bad)?;
        Ok(HalfInt::from_doubled(if negative { -doubled } else { doubled }))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: i64) -> Self {
        match x.cmp(&0) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

pub fn ordering_symbol(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}

/// Contribution of the adjacent pair `(prev, next)` to the weight.
#[inline]
fn pair_term(prev: Letter, next: Letter) -> i64 {
    match (prev.is_positive(), next.is_positive()) {
        (true, false) if prev.index() > next.index() => 1,
        (false, true) if prev.index() > next.index() => -1,
        _ => 0,
    }
}

#[inline]
fn last_term(last: Option<Letter>) -> i64 {
    match last {
        Some(l) if l.is_positive() => 1,
        Some(_) => -1,
        None => 0,
    }
}

fn weight_of<I: IntoIterator<Item = Letter>>(letters: I) -> HalfInt {
    let mut pairs = 0i64;
    let mut prev: Option<Letter> = None;
    for l in letters {
        if let Some(p) = prev {
            pairs += pair_term(p, l);
        }
        prev = Some(l);
    }
    HalfInt::from_doubled(2 * pairs + last_term(prev))
}

pub fn weight(u: &ReducedWord) -> HalfInt {
    weight_of(u.letters().iter().copied())
}

pub fn sign_of(u: &ReducedWord) -> Sign {
    weight(u).sign()
}

pub fn is_positive(u: &ReducedWord) -> bool {
    sign_of(u) == Sign::Positive
}

/// `u` versus `v` in the left order: `Greater` iff `w(v^-1 u) > 0`.
///
/// `v^-1 u` cancels exactly along the common prefix of `u` and `v`, so the
/// reduced difference is streamed without building it.
pub fn compare(u: &ReducedWord, v: &ReducedWord) -> Ordering {
    let (u, v) = (u.letters(), v.letters());
    let common = u.iter().zip(v).take_while(|(a, b)| a == b).count();
    if common == u.len() && common == v.len() {
        return Ordering::Equal;
    }
    let diff = v[common..]
        .iter()
        .rev()
        .map(|l| l.inverse())
        .chain(u[common..].iter().copied());
    match weight_of(diff).sign() {
        Sign::Positive => Ordering::Greater,
        Sign::Negative => Ordering::Less,
        Sign::Zero => unreachable!("nonempty word of weight zero"),
    }
}

/// One-counter recognizer for the positive cone.
///
/// Holds a single integer counter and the previous letter. Letters must
/// arrive as a reduced word; a cancelling pair is an error.
#[derive(Debug, Clone)]
pub struct ConeRecognizer {
    rank: Rank,
    counter: i64,
    prev: Option<Letter>,
    position: usize,
}

impl ConeRecognizer {
    pub fn new(rank: Rank) -> Self {
        ConeRecognizer { rank, counter: 0, prev: None, position: 0 }
    }

    pub fn push(&mut self, letter: Letter) -> Result<(), OrderError> {
        if letter.index() > self.rank.get() {
            return Err(OrderError::IndexOutOfRange { index: letter.index(), rank: self.rank.get() });
        }
        if let Some(prev) = self.prev {
            if prev.cancels(letter) {
                return Err(OrderError::NotReduced { position: self.position });
            }
            self.counter += pair_term(prev, letter);
        }
        self.prev = Some(letter);
        self.position += 1;
        Ok(())
    }

    /// Weight of the letters seen so far.
    pub fn weight(&self) -> HalfInt {
        HalfInt::from_doubled(2 * self.counter + last_term(self.prev))
    }

    pub fn finish(self) -> Sign {
        self.weight().sign()
    }
}

/// Sign of a reduced word read once, left to right, in O(1) space.
pub fn sign_stream<I>(rank: Rank, letters: I) -> Result<Sign, OrderError>
where
    I: IntoIterator<Item = Letter>,
{
    let mut rec = ConeRecognizer::new(rank);
    for l in letters {
        rec.push(l)?;
    }
    Ok(rec.finish())
}

/// Lexicographic order on positive words, `s_1 < ... < s_k`, proper prefix smaller.
pub fn lex_compare(u: &ReducedWord, v: &ReducedWord) -> Result<Ordering, OrderError> {
    if !u.is_positive_monoid_word() || !v.is_positive_monoid_word() {
        return Err(OrderError::NegativeLetter);
    }
    Ok(u.letters().iter().map(|l| l.index()).cmp(v.letters().iter().map(|l| l.index())))
}

/// Alternative weight on `F_2 = <a, b>`: `+1` per `ab` or `aB`, `-1` per
/// `BA` or `Ba`, plus `±1/2` by the last letter.
pub fn weight_f2_variant(rank: Rank, u: &ReducedWord) -> Result<HalfInt, OrderError> {
    if rank.get() != 2 {
        return Err(OrderError::VariantNeedsRankTwo);
    }
    if let Some(l) = u.letters().iter().find(|l| l.index() > 2) {
        return Err(OrderError::IndexOutOfRange { index: l.index(), rank: 2 });
    }
    let pairs: i64 = u
        .letters()
        .windows(2)
        .map(|p| match (p[0].code(), p[1].code()) {
            (1, 2) | (1, -2) => 1,
            (-2, -1) | (-2, 1) => -1,
            _ => 0,
        })
        .sum();
    Ok(HalfInt::from_doubled(2 * pairs + last_term(u.last())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{concat, invert, parse_word};

    fn k(n: u32) -> Rank {
        Rank::new(n).unwrap()
    }

    fn p3(s: &str) -> ReducedWord {
        parse_word(s, k(3)).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight(&ReducedWord::empty()), HalfInt::ZERO);
        assert_eq!(weight(&p3("a")).doubled(), 1);
        assert_eq!(weight(&p3("cB")).doubled(), 1);
        assert_eq!(weight(&p3("Ca")).doubled(), -1);
        for s in ["abc", "cba", "aaab", "ccccc", "bcabca"] {
            assert_eq!(weight(&p3(s)).doubled(), 1, "{s}");
        }
    }

    #[test]
    fn pair_terms_k3() {
        // counted up: cB, cA, bA; counted down: Cb, Ca, Ba
        assert_eq!(weight(&p3("cA")).doubled(), 1);
        assert_eq!(weight(&p3("bA")).doubled(), 1);
        assert_eq!(weight(&p3("Cb")).doubled(), -1);
        assert_eq!(weight(&p3("Ba")).doubled(), -1);
        // uncounted pairs
        assert_eq!(weight(&p3("aB")).doubled(), -1);
        assert_eq!(weight(&p3("Ac")).doubled(), 1);
        assert_eq!(weight(&p3("cBcA")).doubled(), 2 * 2 - 1);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(sign_of(&ReducedWord::empty()), Sign::Zero);
        assert_eq!(sign_of(&p3("a")), Sign::Positive);
        assert_eq!(sign_of(&p3("A")), Sign::Negative);
    }

    #[test]
    fn compare_examples() {
        let u = p3("abC");
        assert_eq!(compare(&u, &u), Ordering::Equal);
        assert_eq!(compare(&p3("ab"), &p3("aab")), Ordering::Greater);
        assert_eq!(compare(&p3("a"), &p3("aa")), Ordering::Less);
        assert_eq!(compare(&p3("ab"), &p3("b")), Ordering::Less);
        assert_eq!(concat(&invert(&p3("b")), &p3("ab")), p3("Bab"));
    }

    #[test]
    fn stream_examples() {
        let r = k(3);
        assert_eq!(sign_stream(r, p3("cB").into_letters()), Ok(Sign::Positive));
        assert_eq!(sign_stream(r, std::iter::empty()), Ok(Sign::Zero));
        assert_eq!(
            sign_stream(r, [Letter::pos(1), Letter::neg(1)]),
            Err(OrderError::NotReduced { position: 1 })
        );
        assert_eq!(
            sign_stream(r, [Letter::pos(4)]),
            Err(OrderError::IndexOutOfRange { index: 4, rank: 3 })
        );
    }

    #[test]
    fn lex_examples() {
        assert_eq!(lex_compare(&p3(""), &p3("a")), Ok(Ordering::Less));
        assert_eq!(lex_compare(&p3("ab"), &p3("b")), Ok(Ordering::Less));
        assert_eq!(lex_compare(&p3("a"), &p3("ab")), Ok(Ordering::Less));
        assert_eq!(lex_compare(&p3("cab"), &p3("cab")), Ok(Ordering::Equal));
        assert_eq!(lex_compare(&p3("aB"), &p3("a")), Err(OrderError::NegativeLetter));
    }

    #[test]
    fn f2_variant_examples() {
        let r = k(2);
        let p = |s: &str| parse_word(s, r).unwrap();
        assert_eq!(weight_f2_variant(r, &p("")), Ok(HalfInt::ZERO));
        assert_eq!(weight_f2_variant(r, &p("ab")), Ok(HalfInt::from_doubled(3)));
        assert_eq!(weight_f2_variant(r, &p("Ba")), Ok(HalfInt::from_doubled(-1)));
        assert_eq!(weight_f2_variant(r, &p("aB")), Ok(HalfInt::from_doubled(1)));
        assert_eq!(weight_f2_variant(r, &p("BA")), Ok(HalfInt::from_doubled(-3)));
        assert_eq!(weight_f2_variant(k(3), &p("ab")), Err(OrderError::VariantNeedsRankTwo));
    }

    #[test]
    fn half_int_rendering() {
        let cases = [(0, "0"), (1, "0.5"), (-1, "-0.5"), (3, "1.5"), (-5, "-2.5"), (4, "2"), (-4, "-2")];
        for (d, s) in cases {
            let h = HalfInt::from_doubled(d);
            assert_eq!(h.to_string(), s);
            assert_eq!(s.parse::<HalfInt>(), Ok(h));
            assert_eq!(h.as_fraction().parse::<HalfInt>(), Ok(h));
        }
        assert_eq!("-1/2".parse::<HalfInt>(), Ok(HalfInt::from_doubled(-1)));
        assert!("0.25".parse::<HalfInt>().is_err());
        assert!("x".parse::<HalfInt>().is_err());
    }
}
