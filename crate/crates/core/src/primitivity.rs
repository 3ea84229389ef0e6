//! Deciding primitivity, bases and proper powers in F(A,B).
//!
//! A cyclically reduced primitive word that uses both generators has, after
//! possibly inverting either generator and possibly swapping them, the shape
//! `A^{m_1} B A^{m_2} B ... A^{m_j} B` with every `m_i ∈ {e, e+1}` for some
//! `e > 0`. The substitution `B ↦ A^{-e} B` then strictly shortens the word,
//! and repeating this until a single generator remains decides primitivity.

use serde::{Deserialize, Serialize};

use crate::automorphism::Automorphism;
use crate::error::{Error, Result};
use crate::word::{cyclic_equal, CyclicWord, Generator, Word};

/// Which generator inversions and swap were applied before reading off a [`CmzForm`].
///
/// Inversions refer to the original generators and are applied first; the
/// swap is applied afterwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignNormalization {
    pub invert_a: bool,
    pub invert_b: bool,
    pub swap: bool,
}

impl SignNormalization {
    /// All eight normalizations in the fixed search order.
    pub fn all() -> impl Iterator<Item = SignNormalization> {
        (0..8u8).map(|bits| SignNormalization {
            swap: bits & 4 != 0,
            invert_a: bits & 2 != 0,
            invert_b: bits & 1 != 0,
        })
    }

    pub fn automorphism(&self) -> Automorphism {
        let mut f = Automorphism::identity();
        if self.invert_a {
            f = Automorphism::invert_generator(Generator::A).compose(&f);
        }
        if self.invert_b {
            f = Automorphism::invert_generator(Generator::B).compose(&f);
        }
        if self.swap {
            f = Automorphism::swap().compose(&f);
        }
        f
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CmzForm {
    /// Original generator carrying the exponents `{e, e+1}`.
    pub base_generator: Generator,
    pub e: i64,
    /// Number of syllables with exponent `e`.
    pub a: usize,
    /// Number of syllables with exponent `e + 1`.
    pub b: usize,
    pub sign_normalization: SignNormalization,
}

/// Reads off the normalized form, trying the eight sign normalizations in order.
pub fn cmz_form(w: &CyclicWord) -> Result<Option<CmzForm>> {
    Ok(normalized_cmz(w)?.map(|(form, _)| form))
}

// Returns the form together with the normalized cyclic word it was read from.
fn normalized_cmz(w: &CyclicWord) -> Result<Option<(CmzForm, CyclicWord)>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !w.word().contains_generator(Generator::A) || !w.word().contains_generator(Generator::B) {
        return Err(Error::SingleGenerator(w.to_string()));
    }
    for norm in SignNormalization::all() {
        let image = norm.automorphism().apply_cyclic(w);
        let syllables = image.syllables()?;
        let mut a_exps = Vec::with_capacity(syllables.len() / 2);
        let mut b_ok = true;
        for s in &syllables {
            match s.generator {
                Generator::A => a_exps.push(s.exponent),
                Generator::B => b_ok &= s.exponent == 1,
            }
        }
        if !b_ok {
            continue;
        }
        let e = *a_exps.iter().min().expect("both generators occur");
        if e <= 0 || a_exps.iter().any(|&m| m != e && m != e + 1) {
            continue;
        }
        let a = a_exps.iter().filter(|&&m| m == e).count();
        let form = CmzForm {
            base_generator: if norm.swap { Generator::B } else { Generator::A },
            e,
            a,
            b: a_exps.len() - a,
            sign_normalization: norm,
        };
        return Ok(Some((form, image)));
    }
    Ok(None)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Sequence of cyclic words visited by the length-reducing loop, ending at
/// the word where it stopped. Primitive iff the last entry is a single letter.
pub fn reduction_chain(w: &Word) -> Vec<CyclicWord> {
    let mut current = CyclicWord::new(w);
    let mut chain = vec![current.clone()];
    loop {
        if current.is_empty() {
            return chain;
        }
        let has_a = current.word().contains_generator(Generator::A);
        let has_b = current.word().contains_generator(Generator::B);
        if !(has_a && has_b) {
            return chain;
        }
        let (x, y) = current.abelianize();
        if gcd(x, y) != 1 {
            return chain;
        }
        let Some((form, normalized)) = normalized_cmz(&current).expect("nonempty, both generators") else {
            return chain;
        };
        let reducer = Automorphism::left_transvection(Generator::B, -form.e);
        let next = reducer.apply_cyclic(&normalized);
        assert!(next.len() < current.len(), "reduction must shorten {current}");
        current = next;
        chain.push(current.clone());
    }
}

pub fn is_primitive(w: &Word) -> bool {
    let chain = reduction_chain(w);
    chain.last().map_or(false, |c| c.len() == 1)
}

/// Commutator test: `(u, v)` is a basis iff `[u, v]` is conjugate to `[A, B]^{±1}`.
pub fn is_basis_pair(u: &Word, v: &Word) -> bool {
    let comm = u.multiply(v).multiply(&u.inverse()).multiply(&v.inverse());
    let standard = CyclicWord::from_letters(
        "ABab".chars().map(|c| crate::word::Letter::from_char(c).unwrap()),
    );
    cyclic_equal(&CyclicWord::new(&comm), &standard, true)
}

/// `Some((root, k))` when the cyclic reduction of `w` is `root^k` with `k ≥ 2`.
pub fn is_proper_power(w: &Word) -> Option<(CyclicWord, usize)> {
    let c = CyclicWord::new(w);
    let letters = c.letters();
    let n = letters.len();
    let period = (1..n)
        .filter(|d| n % d == 0)
        .find(|&d| (d..n).all(|i| letters[i] == letters[i - d]))?;
    Some((CyclicWord::from_letters(letters[..period].iter().copied()), n / period))
}
