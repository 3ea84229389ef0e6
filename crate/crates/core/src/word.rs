//! Words in the free group F(A,B).
//!
//! Strings use uppercase for a generator and lowercase for its inverse, so
//! `"AABab"` is `A·A·B·A⁻¹·B⁻¹`. The caret form `"A^2 B A^-1"` is accepted as
//! well. The identity prints as `1`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    A,
    B,
}

impl Generator {
    pub fn other(self) -> Generator {
        match self {
            Generator::A => Generator::B,
            Generator::B => Generator::A,
        }
    }

    pub fn letter(self) -> Letter {
        Letter::new(self, false)
    }

    pub fn as_char(self) -> char {
        match self {
            Generator::A => 'A',
            Generator::B => 'B',
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A generator or its inverse. The derived order is `A < a < B < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv];

    pub fn new(generator: Generator, inverted: bool) -> Letter {
        match (generator, inverted) {
            (Generator::A, false) => Letter::A,
            (Generator::A, true) => Letter::AInv,
            (Generator::B, false) => Letter::B,
            (Generator::B, true) => Letter::BInv,
        }
    }

    pub fn generator(self) -> Generator {
        match self {
            Letter::A | Letter::AInv => Generator::A,
            Letter::B | Letter::BInv => Generator::B,
        }
    }

    pub fn is_inverse(self) -> bool {
        matches!(self, Letter::AInv | Letter::BInv)
    }

    /// `+1` for a generator, `-1` for an inverse.
    pub fn sign(self) -> i64 {
        if self.is_inverse() {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Letter {
        Letter::new(self.generator(), !self.is_inverse())
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::AInv => 'a',
            Letter::B => 'B',
            Letter::BInv => 'b',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'A' => Some(Letter::A),
            'a' => Some(Letter::AInv),
            'B' => Some(Letter::B),
            'b' => Some(Letter::BInv),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A freely reduced word.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

/// Freely reduces a letter sequence.
pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
    let mut out: Vec<Letter> = Vec::new();
    for x in letters {
        if out.last() == Some(&x.inverse()) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    Word(out)
}

pub fn multiply(u: &Word, v: &Word) -> Word {
    u.multiply(v)
}

pub fn invert(u: &Word) -> Word {
    u.inverse()
}

pub fn abelianize(w: &Word) -> (i64, i64) {
    w.abelianize()
}

pub fn cyclic_reduce(u: &Word) -> (CyclicWord, Word) {
    u.cyclic_reduce()
}

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn letter(x: Letter) -> Word {
        Word(vec![x])
    }

    pub fn generator(g: Generator) -> Word {
        Word(vec![g.letter()])
    }

    /// `g^k` for a generator `g`.
    pub fn power_of(g: Generator, k: i64) -> Word {
        let x = Letter::new(g, k < 0);
        Word(vec![x; k.unsigned_abs() as usize])
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

    pub fn multiply(&self, other: &Word) -> Word {
        // Only the junction can cancel.
        let mut k = 0;
        while k < self.len()
            && k < other.len()
            && self.0[self.len() - 1 - k] == other.0[k].inverse()
        {
            k += 1;
        }
        let mut out = Vec::with_capacity(self.len() + other.len() - 2 * k);
        out.extend_from_slice(&self.0[..self.len() - k]);
        out.extend_from_slice(&other.0[k..]);
        Word(out)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|x| x.inverse()).collect())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// Exponent sums of A and of B.
    pub fn abelianize(&self) -> (i64, i64) {
        self.0.iter().fold((0, 0), |(a, b), x| match x.generator() {
            Generator::A => (a + x.sign(), b),
            Generator::B => (a, b + x.sign()),
        })
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(&f), Some(&l)) => self.len() == 1 || f != l.inverse(),
            _ => true,
        }
    }

    /// Returns `(c, t)` with `self = t · c · t⁻¹` and `c` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (CyclicWord, Word) {
        let n = self.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.0[k] == self.0[n - 1 - k].inverse() {
            k += 1;
        }
        let core = &self.0[k..n - k];
        let r = least_rotation(core);
        let mut conjugator = self.0[..k].to_vec();
        conjugator.extend_from_slice(&core[..r]);
        let mut rotated = core[r..].to_vec();
        rotated.extend_from_slice(&core[..r]);
        (CyclicWord(Word(rotated)), reduce(conjugator))
    }

    /// Image under the letter substitution `A ↦ image_a`, `B ↦ image_b`.
    pub fn substitute(&self, image_a: &Word, image_b: &Word) -> Word {
        let (inv_a, inv_b) = (image_a.inverse(), image_b.inverse());
        let mut out = Word::identity();
        for &x in &self.0 {
            let piece = match x {
                Letter::A => image_a,
                Letter::AInv => &inv_a,
                Letter::B => image_b,
                Letter::BInv => &inv_b,
            };
            out = out.multiply(piece);
        }
        out
    }

    pub fn contains_generator(&self, g: Generator) -> bool {
        self.0.iter().any(|x| x.generator() == g)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        reduce(iter)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let err = |position: usize, found: char| Error::WordParse {
            input: s.to_string(),
            position,
            found,
        };
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "1" {
            return Ok(Word::identity());
        }
        let chars: Vec<(usize, char)> = s.char_indices().collect();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let (pos, c) = chars[i];
            if c.is_whitespace() || c == '*' || c == '.' {
                i += 1;
                continue;
            }
            let x = Letter::from_char(c).ok_or_else(|| err(pos, c))?;
            i += 1;
            let mut exponent: i64 = 1;
            if i < chars.len() && chars[i].1 == '^' {
                i += 1;
                let start = i;
                if i < chars.len() && (chars[i].1 == '-' || chars[i].1 == '+') {
                    i += 1;
                }
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                exponent = text.parse().map_err(|_| {
                    let (p, c) = chars.get(start).copied().unwrap_or((s.len(), '^'));
                    err(p, c)
                })?;
            }
            let x = if exponent < 0 { x.inverse() } else { x };
            letters.extend(std::iter::repeat(x).take(exponent.unsigned_abs() as usize));
        }
        Ok(reduce(letters))
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Index of the lexicographically least rotation.
fn least_rotation(letters: &[Letter]) -> usize {
    let n = letters.len();
    let mut best = 0;
    for i in 1..n {
        let candidate = letters[i..].iter().chain(&letters[..i]);
        let current = letters[best..].iter().chain(&letters[..best]);
        if candidate.cmp(current) == Ordering::Less {
            best = i;
        }
    }
    best
}

/// A conjugacy class, stored as its least cyclically reduced rotation.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord(Word);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Syllable {
    pub generator: Generator,
    pub exponent: i64,
}

impl Syllable {
    pub fn new(generator: Generator, exponent: i64) -> Syllable {
        Syllable {
            generator,
            exponent,
        }
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.generator, self.exponent)
    }
}

impl CyclicWord {
    pub fn new(w: &Word) -> CyclicWord {
        w.cyclic_reduce().0
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> CyclicWord {
        CyclicWord::new(&reduce(letters))
    }

    pub fn identity() -> CyclicWord {
        CyclicWord(Word::identity())
    }

    /// The canonical representative.
    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn letters(&self) -> &[Letter] {
        self.0.letters()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord::new(&self.0.inverse())
    }

    pub fn abelianize(&self) -> (i64, i64) {
        self.0.abelianize()
    }

    /// Alternating syllable decomposition of the canonical rotation.
    ///
    /// When both generators occur the least rotation starts with an A-letter
    /// that is not preceded by another A-letter, so the first syllable is a
    /// complete A-syllable.
    pub fn syllables(&self) -> Result<Vec<Syllable>> {
        let letters = self.letters();
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut out: Vec<Syllable> = Vec::new();
        for &x in letters {
            match out.last_mut() {
                Some(s) if s.generator == x.generator() => s.exponent += x.sign(),
                _ => out.push(Syllable::new(x.generator(), x.sign())),
            }
        }
        Ok(out)
    }
}

pub fn syllables(w: &CyclicWord) -> Result<Vec<Syllable>> {
    w.syllables()
}

/// Equality of conjugacy classes, optionally also allowing `v ~ u⁻¹`.
pub fn cyclic_equal(u: &CyclicWord, v: &CyclicWord, up_to_inversion: bool) -> bool {
    u == v || (up_to_inversion && *u == v.inverse())
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for CyclicWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<CyclicWord> {
        Ok(CyclicWord::new(&s.parse()?))
    }
}

impl Serialize for CyclicWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CyclicWord {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
