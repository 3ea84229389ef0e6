//! Automorphisms of F(A,B), stored by the images of the two generators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primitivity::is_basis_pair;
use crate::word::{CyclicWord, Generator, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Automorphism {
    #[serde(rename = "A")]
    image_a: Word,
    #[serde(rename = "B")]
    image_b: Word,
}

impl Automorphism {
    /// Validates that the images form a basis.
    pub fn new(image_a: Word, image_b: Word) -> Result<Automorphism> {
        if !is_basis_pair(&image_a, &image_b) {
            return Err(Error::NotABasis(image_a.to_string(), image_b.to_string()));
        }
        Ok(Automorphism { image_a, image_b })
    }

    pub fn from_strs(image_a: &str, image_b: &str) -> Result<Automorphism> {
        Automorphism::new(image_a.parse()?, image_b.parse()?)
    }

    // Callers guarantee the basis property.
    pub(crate) fn from_images_unchecked(image_a: Word, image_b: Word) -> Automorphism {
        debug_assert!(is_basis_pair(&image_a, &image_b));
        Automorphism { image_a, image_b }
    }

    pub fn identity() -> Automorphism {
        Automorphism::from_images_unchecked(Word::generator(Generator::A), Word::generator(Generator::B))
    }

    pub fn swap() -> Automorphism {
        Automorphism::from_images_unchecked(Word::generator(Generator::B), Word::generator(Generator::A))
    }

    pub fn invert_generator(g: Generator) -> Automorphism {
        let (a, b) = (Word::generator(Generator::A), Word::generator(Generator::B));
        match g {
            Generator::A => Automorphism::from_images_unchecked(a.inverse(), b),
            Generator::B => Automorphism::from_images_unchecked(a, b.inverse()),
        }
    }

    /// `g ↦ g · h^k`, fixing the other generator `h`.
    pub fn transvection(g: Generator, k: i64) -> Automorphism {
        let h = g.other();
        let moved = Word::generator(g).multiply(&Word::power_of(h, k));
        match g {
            Generator::A => Automorphism::from_images_unchecked(moved, Word::generator(h)),
            Generator::B => Automorphism::from_images_unchecked(Word::generator(h), moved),
        }
    }

    /// `g ↦ h^k · g`, fixing the other generator `h`.
    pub fn left_transvection(g: Generator, k: i64) -> Automorphism {
        let h = g.other();
        let moved = Word::power_of(h, k).multiply(&Word::generator(g));
        match g {
            Generator::A => Automorphism::from_images_unchecked(moved, Word::generator(h)),
            Generator::B => Automorphism::from_images_unchecked(Word::generator(h), moved),
        }
    }

    pub fn image_a(&self) -> &Word {
        &self.image_a
    }

    pub fn image_b(&self) -> &Word {
        &self.image_b
    }

    pub fn image(&self, g: Generator) -> &Word {
        match g {
            Generator::A => &self.image_a,
            Generator::B => &self.image_b,
        }
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(&self.image_a, &self.image_b)
    }

    pub fn apply_cyclic(&self, w: &CyclicWord) -> CyclicWord {
        CyclicWord::new(&self.apply(w.word()))
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism::from_images_unchecked(self.apply(&other.image_a), self.apply(&other.image_b))
    }

    /// Integer matrix acting on abelianizations; columns are the images of A and B.
    pub fn matrix(&self) -> [[i64; 2]; 2] {
        let (a0, a1) = self.image_a.abelianize();
        let (b0, b1) = self.image_b.abelianize();
        [[a0, b0], [a1, b1]]
    }

    /// Inverse via Nielsen reduction of the image pair.
    ///
    /// Each elementary move applied to the images is mirrored on a pair of
    /// words `(s, t)` starting at `(A, B)`, keeping `self(s), self(t)` equal
    /// to the current pair. Once the pair is `(x^±1, y^±1)` the preimages of
    /// the generators can be read off.
    pub fn inverse(&self) -> Result<Automorphism> {
        let fail = || Error::NotInvertible(self.image_a.to_string(), self.image_b.to_string());
        let mut pair = [self.image_a.clone(), self.image_b.clone()];
        let mut track = [Word::generator(Generator::A), Word::generator(Generator::B)];
        loop {
            let total = pair[0].len() + pair[1].len();
            if total == 2 {
                break;
            }
            let mut best: Option<(usize, Word, Word)> = None;
            for i in 0..2 {
                let j = 1 - i;
                let options = [
                    (pair[j].clone(), track[j].clone()),
                    (pair[j].inverse(), track[j].inverse()),
                ];
                for (other, other_track) in options {
                    for right in [true, false] {
                        let (cand, cand_track) = if right {
                            (pair[i].multiply(&other), track[i].multiply(&other_track))
                        } else {
                            (other.multiply(&pair[i]), other_track.multiply(&track[i]))
                        };
                        if cand.is_empty() || cand.len() >= pair[i].len() {
                            continue;
                        }
                        if best.as_ref().map_or(true, |(_, b, _)| cand.len() < b.len()) {
                            best = Some((i, cand, cand_track));
                        }
                    }
                }
            }
            let (i, cand, cand_track) = best.ok_or_else(fail)?;
            pair[i] = cand;
            track[i] = cand_track;
        }
        let mut pre = [Word::identity(), Word::identity()];
        for i in 0..2 {
            let x = pair[i].letters()[0];
            let preimage = if x.is_inverse() { track[i].inverse() } else { track[i].clone() };
            pre[x.generator() as usize] = preimage;
        }
        Automorphism::new(pre[0].clone(), pre[1].clone()).map_err(|_| fail())
    }
}

pub fn apply(f: &Automorphism, w: &Word) -> Word {
    f.apply(w)
}

pub fn compose(f: &Automorphism, g: &Automorphism) -> Automorphism {
    f.compose(g)
}

pub fn invert_auto(f: &Automorphism) -> Result<Automorphism> {
    f.inverse()
}

/// `A ↦ A⁻¹`, `A ↔ B`, `A ↦ AB` and their inverses (`A ↦ Ab`; the first two are involutions).
pub fn nielsen_generators() -> Vec<Automorphism> {
    vec![
        Automorphism::invert_generator(Generator::A),
        Automorphism::swap(),
        Automorphism::transvection(Generator::A, 1),
        Automorphism::transvection(Generator::A, -1),
    ]
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(A -> {}, B -> {})", self.image_a, self.image_b)
    }
}

impl<'de> Deserialize<'de> for Automorphism {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Images {
            #[serde(rename = "A")]
            a: Word,
            #[serde(rename = "B")]
            b: Word,
        }
        let images = Images::deserialize(deserializer)?;
        Automorphism::new(images.a, images.b).map_err(serde::de::Error::custom)
    }
}
