//! Reduced words in the free group on `k` generators.
//!
//! Letters are stored as signed indices: `+i` is the generator `s_i` and
//! `-i` its inverse `S_i`. Every [`ReducedWord`] is freely reduced; all
//! constructors run free reduction on their input.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Largest rank for which the single-letter syntax (`a..z`, `A..Z`) applies.
pub const MAX_LETTER_RANK: u32 = 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(u32),
    #[error("rank {0} is too large")]
    RankTooLarge(u32),
    #[error("invalid character {0:?} in word")]
    InvalidChar(char),
    #[error("generator index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: i64, rank: u32 },
    #[error("letter syntax needs rank <= 26, got {0}")]
    RankTooLargeForLetters(u32),
    #[error("zero is not a generator in numeric syntax")]
    ZeroLetter,
    #[error("malformed numeric word {0:?}")]
    MalformedNumber(String),
}

/// Number of free generators, `k >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank(u32);

impl Rank {
    pub fn new(k: u32) -> Result<Self, WordError> {
        if k < 2 {
            return Err(WordError::RankTooSmall(k));
        }
        if k > i32::MAX as u32 {
            return Err(WordError::RankTooLarge(k));
        }
        Ok(Rank(k))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// All `2k` letters in [`Letter`] order.
    pub fn letters(self) -> impl Iterator<Item = Letter> + Clone {
        (1..=self.0 as i32).flat_map(|i| [Letter(i), Letter(-i)])
    }

    pub fn positive_letters(self) -> impl Iterator<Item = Letter> + Clone {
        (1..=self.0 as i32).map(Letter)
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A generator or its inverse.
///
/// Letters are ordered by generator index, with `s_i` before `S_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i32);

impl Letter {
    /// The generator `s_index`.
    pub fn pos(index: u32) -> Self {
        assert!(index >= 1 && index <= i32::MAX as u32, "generator index must be positive");
        Letter(index as i32)
    }

    /// The inverse generator `S_index`.
    pub fn neg(index: u32) -> Self {
        Letter::pos(index).inverse()
    }

    /// Builds a letter from its signed code, checking it against `rank`.
    pub fn from_code(code: i64, rank: Rank) -> Result<Self, WordError> {
        if code == 0 {
            return Err(WordError::ZeroLetter);
        }
        if code.unsigned_abs() > rank.get() as u64 {
            return Err(WordError::IndexOutOfRange { index: code.abs(), rank: rank.get() });
        }
        Ok(Letter(code as i32))
    }

    /// Signed code: `i` for `s_i`, `-i` for `S_i`.
    pub fn code(self) -> i32 {
        self.0
    }

    pub fn index(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.0 == -other.0
    }

    fn to_char(self) -> char {
        let base = if self.is_positive() { b'a' } else { b'A' };
        (base + (self.index() - 1) as u8) as char
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.index(), self.is_negative()).cmp(&(other.index(), other.is_negative()))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A freely reduced word; the canonical form of a free group element.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord(Vec<Letter>);

impl ReducedWord {
    pub fn empty() -> Self {
        ReducedWord(Vec::new())
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn new<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        free_reduce(letters)
    }

    /// Wraps letters that are already known to be reduced.
    ///
    /// Returns `None` if some adjacent pair cancels.
    pub fn from_reduced(letters: Vec<Letter>) -> Option<Self> {
        if letters.windows(2).any(|p| p[0].cancels(p[1])) {
            None
        } else {
            Some(ReducedWord(letters))
        }
    }

    /// Reduced word from signed codes, without a rank check. Panics on 0.
    pub fn from_codes(codes: &[i32]) -> Self {
        free_reduce(codes.iter().map(|&c| {
            assert!(c != 0, "zero is not a letter");
            Letter(c)
        }))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// True when every letter is a positive generator (a monoid word).
    pub fn is_positive_monoid_word(&self) -> bool {
        self.0.iter().all(|l| l.is_positive())
    }

    pub fn max_index(&self) -> u32 {
        self.0.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    pub fn invert(&self) -> Self {
        invert(self)
    }

    pub fn reverse(&self) -> Self {
        reverse(self)
    }

    pub fn concat(&self, other: &ReducedWord) -> Self {
        concat(self, other)
    }

    /// Renders the word for `rank`: letter syntax for `k <= 26`, numeric otherwise.
    pub fn display(&self, rank: Rank) -> WordDisplay<'_> {
        WordDisplay { word: self, letters: rank.get() <= MAX_LETTER_RANK }
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }
}

impl<'a> IntoIterator for &'a ReducedWord {
    type Item = &'a Letter;
    type IntoIter = std::slice::Iter<'a, Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

pub struct WordDisplay<'a> {
    word: &'a ReducedWord,
    letters: bool,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters {
            for l in self.word.letters() {
                write!(f, "{}", l.to_char())?;
            }
        } else {
            for (i, l) in self.word.letters().iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", l.code())?;
            }
        }
        Ok(())
    }
}

/// Single left-to-right pass, keeping retained letters on a stack.
pub fn free_reduce<I: IntoIterator<Item = Letter>>(letters: I) -> ReducedWord {
    let mut stack: Vec<Letter> = Vec::new();
    for l in letters {
        match stack.last() {
            Some(&top) if top.cancels(l) => {
                stack.pop();
            }
            _ => stack.push(l),
        }
    }
    ReducedWord(stack)
}

pub fn invert(u: &ReducedWord) -> ReducedWord {
    ReducedWord(u.0.iter().rev().map(|l| l.inverse()).collect())
}

pub fn reverse(u: &ReducedWord) -> ReducedWord {
    ReducedWord(u.0.iter().rev().copied().collect())
}

pub fn concat(u: &ReducedWord, v: &ReducedWord) -> ReducedWord {
    let overlap = u
        .0
        .iter()
        .rev()
        .zip(&v.0)
        .take_while(|(a, b)| a.cancels(**b))
        .count();
    let mut out = Vec::with_capacity(u.len() + v.len() - 2 * overlap);
    out.extend_from_slice(&u.0[..u.len() - overlap]);
    out.extend_from_slice(&v.0[overlap..]);
    ReducedWord(out)
}

/// Parses a word in letter syntax (`[a-zA-Z]*`) or numeric syntax
/// (`-1,2,3`), ignoring whitespace. Numeric syntax is chosen when the text
/// contains a digit. The result is freely reduced.
pub fn parse_word(text: &str, rank: Rank) -> Result<ReducedWord, WordError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Ok(ReducedWord::empty());
    }
    if compact.chars().any(|c| c.is_ascii_digit()) {
        parse_numeric(&compact, rank)
    } else {
        parse_letters(&compact, rank)
    }
}

fn parse_letters(text: &str, rank: Rank) -> Result<ReducedWord, WordError> {
    if rank.get() > MAX_LETTER_RANK {
        return Err(WordError::RankTooLargeForLetters(rank.get()));
    }
    let mut letters = Vec::with_capacity(text.len());
    for c in text.chars() {
        let code = match c {
            'a'..='z' => (c as u8 - b'a') as i64 + 1,
            'A'..='Z' => -((c as u8 - b'A') as i64 + 1),
            _ => return Err(WordError::InvalidChar(c)),
        };
        letters.push(Letter::from_code(code, rank)?);
    }
    Ok(free_reduce(letters))
}

fn parse_numeric(text: &str, rank: Rank) -> Result<ReducedWord, WordError> {
    let mut letters = Vec::new();
    for field in text.split(',') {
        let digits = field.strip_prefix('-').unwrap_or(field);
        if digits.is_empty() {
            return Err(WordError::MalformedNumber(field.to_string()));
        }
        if let Some(c) = digits.chars().find(|c| !c.is_ascii_digit()) {
            return Err(WordError::InvalidChar(c));
        }
        if digits.starts_with('0') {
            return Err(if digits.bytes().all(|b| b == b'0') {
                WordError::ZeroLetter
            } else {
                WordError::MalformedNumber(field.to_string())
            });
        }
        let code: i64 = field.parse().map_err(|_| WordError::IndexOutOfRange {
            index: i64::MAX,
            rank: rank.get(),
        })?;
        letters.push(Letter::from_code(code, rank)?);
    }
    Ok(free_reduce(letters))
}
