//! Brute-force ground truth for the decision procedures.
//!
//! Primitive conjugacy classes are enumerated as the orbit of `A` under the
//! Nielsen generators, with lengths pruned a few letters above the requested
//! bound. Bases are certified by greedy Nielsen reduction of the pair.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::automorphism::nielsen_generators;
use crate::error::{Error, Result};
use crate::word::{CyclicWord, Generator, Letter, Word};

pub const MAX_ENUMERATION_LENGTH: usize = 14;

/// Extra letters allowed during the closure above the reported bound.
pub const CLOSURE_SLACK: usize = 4;

pub type PrimitiveSet = Arc<BTreeSet<CyclicWord>>;

fn cache() -> &'static Mutex<BTreeMap<usize, PrimitiveSet>> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, PrimitiveSet>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::new()))
}

// Breadth-first orbit of A, keeping classes of length <= bound.
fn closure(bound: usize) -> BTreeSet<CyclicWord> {
    let gens = nielsen_generators();
    let start = CyclicWord::new(&Word::generator(Generator::A));
    let mut seen = BTreeSet::from([start.clone()]);
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for f in &gens {
                let image = f.apply_cyclic(w);
                if image.len() <= bound && seen.insert(image.clone()) {
                    next.push(image);
                }
            }
        }
        frontier = next;
    }
    seen
}

fn restrict(set: &BTreeSet<CyclicWord>, max_len: usize) -> BTreeSet<CyclicWord> {
    set.iter().filter(|w| w.len() <= max_len).cloned().collect()
}

/// All primitive conjugacy classes of length at most `max_len`.
///
/// The closure runs with bound `max_len + 4` and again with `max_len + 5`;
/// the two restrictions to `max_len` must coincide.
pub fn enumerate_primitives(max_len: usize) -> Result<PrimitiveSet> {
    if !(1..=MAX_ENUMERATION_LENGTH).contains(&max_len) {
        return Err(Error::BudgetExceeded(format!(
            "max_len must lie in 1..={MAX_ENUMERATION_LENGTH}, got {max_len}"
        )));
    }
    if let Some(hit) = cache().lock().expect("cache lock").get(&max_len) {
        return Ok(Arc::clone(hit));
    }
    let first = restrict(&closure(max_len + CLOSURE_SLACK), max_len);
    let second = restrict(&closure(max_len + CLOSURE_SLACK + 1), max_len);
    if first != second {
        return Err(Error::UnstableClosure(max_len));
    }
    let set = Arc::new(first);
    cache()
        .lock()
        .expect("cache lock")
        .insert(max_len, Arc::clone(&set));
    Ok(set)
}

/// Greedy Nielsen reduction: replace either word by a product with the
/// other (or its inverse, on either side) whenever that shortens it, and at
/// a local minimum check for a pair of distinct generators up to sign.
pub fn brute_is_basis(u: &Word, v: &Word, budget: usize) -> Result<bool> {
    if u.len() + v.len() > budget {
        return Err(Error::BudgetExceeded(format!(
            "pair of total length {} exceeds budget {budget}",
            u.len() + v.len()
        )));
    }
    let mut pair = [u.clone(), v.clone()];
    loop {
        if pair[0].is_empty() || pair[1].is_empty() {
            return Ok(false);
        }
        let mut improved = false;
        'search: for i in 0..2 {
            let other = pair[1 - i].clone();
            for x in [other.clone(), other.inverse()] {
                for cand in [pair[i].multiply(&x), x.multiply(&pair[i])] {
                    if cand.len() < pair[i].len() {
                        pair[i] = cand;
                        improved = true;
                        break 'search;
                    }
                }
            }
        }
        if !improved {
            break;
        }
    }
    let gens: Vec<Generator> = pair
        .iter()
        .filter(|w| w.len() == 1)
        .map(|w| w.letters()[0].generator())
        .collect();
    Ok(gens.len() == 2 && gens[0] != gens[1])
}

/// Every reduced word of length at most `max_len`, shortest first.
pub fn reduced_words(max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::identity()];
    let mut layer = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * 3);
        for w in &layer {
            for x in Letter::ALL {
                if w.last().map_or(true, |&y| y != x.inverse()) {
                    let mut longer = w.clone();
                    longer.push(x);
                    next.push(longer);
                }
            }
        }
        out.extend(next.iter().map(|w| w.iter().copied().collect::<Word>()));
        layer = next;
    }
    out
}

/// Every nonempty cyclically reduced word of length at most `max_len`.
pub fn cyclically_reduced_words(max_len: usize) -> Vec<Word> {
    reduced_words(max_len)
        .into_iter()
        .filter(|w| !w.is_empty() && w.is_cyclically_reduced())
        .collect()
}
