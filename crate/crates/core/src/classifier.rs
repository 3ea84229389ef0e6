//! Classification of disjoint primitive pairs from their canonical R-R form,
//! and of pairs in which one curve is a proper power.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primitivity::{is_primitive, is_proper_power};
use crate::rr_diagram::CanonicalParams;
use crate::word::{cyclic_equal, CyclicWord, Generator, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProductStructure {
    /// Opposite sides of a separating disk.
    SeparatedDisk,
    /// Opposite ends of `F × I`.
    Product,
    /// Opposite ends of a twisted product.
    TwistedProduct,
}

impl fmt::Display for ProductStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ProductStructure::SeparatedDisk => "SeparatedDisk",
            ProductStructure::Product => "Product",
            ProductStructure::TwistedProduct => "TwistedProduct",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairClass {
    #[serde(rename = "type_I")]
    pub type_i: bool,
    #[serde(rename = "type_II")]
    pub type_ii: bool,
    pub separated: bool,
    #[serde(rename = "structure")]
    pub product_structure: ProductStructure,
    /// The class `A^n B A^{-n} B^{-1}` of a curve separating the pair.
    pub separating_word: CyclicWord,
    /// The `n` of the separating word.
    #[serde(rename = "twist")]
    pub twist_parameter: i64,
}

impl PairClass {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("class serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PowerPairClass {
    Separated,
    NonseparatingAnnulus,
}

impl fmt::Display for PowerPairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PowerPairClass::Separated => f.write_str("separated"),
            PowerPairClass::NonseparatingAnnulus => f.write_str("annulus"),
        }
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// The longitude coordinates `(r, s)` with `p·s − r·q = 1` and `0 ≤ r < |p|`.
pub fn longitude_pair(p: i64, q: i64) -> Result<(i64, i64)> {
    if p == 0 {
        return Err(Error::InvalidParams("longitude_pair requires p != 0".into()));
    }
    let (g, _, y) = ext_gcd(p, q);
    if g.abs() != 1 {
        return Err(Error::InvalidParams(format!("gcd({p}, {q}) = {} is not 1", g.abs())));
    }
    // p·x + q·y = g, so r ≡ -y·g (mod |p|).
    let m = p.abs();
    let r = (-y * g).rem_euclid(m);
    let s = (1 + r * q) / p;
    debug_assert_eq!(p * s - r * q, 1);
    Ok((r, s))
}

/// Representative of `r` modulo `|p|` in `(−|p|/2, |p|/2]`.
pub fn normalized_twist(r: i64, p: i64) -> i64 {
    let m = p.abs();
    let r = r.rem_euclid(m);
    if 2 * r > m {
        r - m
    } else {
        r
    }
}

/// The cyclic word `A^n B A^{-n} B^{-1}`; trivial for `n = 0`.
pub fn separating_word(n: i64) -> CyclicWord {
    let a_n = Word::power_of(Generator::A, n);
    let b = Word::generator(Generator::B);
    CyclicWord::new(&a_n.multiply(&b).multiply(&a_n.inverse()).multiply(&b.inverse()))
}

/// Classifies the pair drawn by a canonical diagram.
pub fn classify(params: &CanonicalParams) -> Result<PairClass> {
    params.validate()?;
    Ok(match *params {
        // Separated, and the commutator curve also exhibits a product structure.
        CanonicalParams::Fig1a => PairClass {
            type_i: true,
            type_ii: true,
            separated: true,
            product_structure: ProductStructure::SeparatedDisk,
            separating_word: separating_word(1),
            twist_parameter: 1,
        },
        CanonicalParams::Fig2a { p, q } => {
            let (r, _) = longitude_pair(p, q)?;
            let twist = normalized_twist(r, p);
            let product_structure = match twist.abs() {
                0 => ProductStructure::SeparatedDisk,
                1 => ProductStructure::Product,
                _ => ProductStructure::TwistedProduct,
            };
            PairClass {
                type_i: true,
                type_ii: twist.abs() <= 1,
                separated: twist == 0,
                product_structure,
                separating_word: separating_word(twist),
                twist_parameter: twist,
            }
        }
        CanonicalParams::Fig3a { eps, .. } => PairClass {
            type_i: false,
            type_ii: true,
            separated: false,
            product_structure: ProductStructure::Product,
            separating_word: separating_word(eps),
            twist_parameter: eps,
        },
    })
}

/// Pairs in which `β` is a proper power and `α` is primitive or a proper power.
///
/// Realizability of the words by disjoint nonparallel curves is assumed.
pub fn classify_power_pair(alpha: &Word, beta: &Word) -> Result<PowerPairClass> {
    if alpha.is_empty() || beta.is_empty() {
        return Err(Error::TrivialWord);
    }
    if is_proper_power(beta).is_none() {
        return Err(Error::BetaNotProperPower(beta.to_string()));
    }
    if !is_primitive(alpha) && is_proper_power(alpha).is_none() {
        return Err(Error::AlphaNotPrimitiveOrPower(alpha.to_string()));
    }
    let (a, b) = (CyclicWord::new(alpha), CyclicWord::new(beta));
    Ok(if cyclic_equal(&a, &b, true) {
        PowerPairClass::NonseparatingAnnulus
    } else {
        PowerPairClass::Separated
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primitivity::is_primitive;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn cw(s: &str) -> CyclicWord {
        s.parse().unwrap()
    }

    // Smallest-|r| solution found by direct search over r in (-|p|, |p|).
    fn search_pair(p: i64, q: i64) -> Option<(i64, i64)> {
        let m = p.abs();
        let mut found = None;
        for r in -(m - 1)..m {
            for s in -(4 * m + q.abs() + 2)..=(4 * m + q.abs() + 2) {
                if p * s - r * q == 1 && found.map_or(true, |(fr, _): (i64, i64)| r.abs() < fr.abs()) {
                    found = Some((r, s));
                }
            }
        }
        found
    }

    #[test]
    fn longitude_examples() {
        assert_eq!(longitude_pair(2, 1).unwrap(), (1, 1));
        assert_eq!(longitude_pair(1, 7).unwrap(), (0, 1));
        assert_eq!(longitude_pair(3, 1).unwrap(), (2, 1));
        assert_eq!(longitude_pair(-1, 0).unwrap(), (0, -1));
        assert!(longitude_pair(4, 2).is_err());
        assert!(longitude_pair(0, 1).is_err());
    }

    #[test]
    fn longitude_agrees_with_search() {
        for p in -12i64..=12 {
            for q in -25i64..=25 {
                if p == 0 || ext_gcd(p, q).0.abs() != 1 {
                    continue;
                }
                let (r, s) = longitude_pair(p, q).unwrap();
                assert_eq!(p * s - r * q, 1);
                assert!((0..p.abs()).contains(&r));
                let (sr, _) = search_pair(p, q).unwrap();
                assert_eq!(normalized_twist(r, p).abs(), sr.abs(), "p={p} q={q}");
            }
        }
    }

    #[test]
    fn separating_word_examples() {
        assert_eq!(separating_word(1), cw("ABab"));
        assert!(separating_word(0).is_empty());
        assert_eq!(separating_word(2), cw("AABaab"));
        for n in -4..=4 {
            let g = separating_word(n);
            assert_eq!(g.abelianize(), (0, 0));
            assert!(!is_primitive(g.word()));
        }
    }

    #[test]
    fn classify_examples() {
        let c = classify(&CanonicalParams::Fig2a { p: 2, q: 1 }).unwrap();
        assert!(c.type_i && c.type_ii && !c.separated);
        assert_eq!(c.product_structure, ProductStructure::Product);
        assert_eq!(c.twist_parameter, 1);

        let c = classify(&CanonicalParams::Fig2a { p: 5, q: 2 }).unwrap();
        assert!(c.type_i && !c.type_ii && !c.separated);
        assert_eq!(c.product_structure, ProductStructure::TwistedProduct);
        assert_eq!(c.twist_parameter.abs(), 2);

        let c = classify(&CanonicalParams::Fig3a { a: 2, b: 1, p: 2, eps: 1 }).unwrap();
        assert!(!c.type_i && c.type_ii && !c.separated);
        assert_eq!(c.product_structure, ProductStructure::Product);
        // Drawn as A^ε B⁻¹ A^{-ε} B, the inverse class of A^ε B A^{-ε} B⁻¹.
        assert!(cyclic_equal(&c.separating_word, &cw("AbaB"), true));

        let c = classify(&CanonicalParams::Fig1a).unwrap();
        assert!(c.separated && c.type_i && c.type_ii);
        assert_eq!(c.separating_word, cw("ABab"));

        let c = classify(&CanonicalParams::Fig2a { p: -1, q: 0 }).unwrap();
        assert!(c.separated && c.type_i && c.type_ii);
        assert_eq!(c.twist_parameter, 0);
        assert_eq!(c.product_structure, ProductStructure::SeparatedDisk);

        assert!(classify(&CanonicalParams::Fig2a { p: 0, q: 1 }).is_err());
    }

    #[test]
    fn classification_json() {
        let c = classify(&CanonicalParams::Fig2a { p: 5, q: 2 }).unwrap();
        assert_eq!(
            c.to_json(),
            r#"{"type_I":true,"type_II":false,"separated":false,"structure":"TwistedProduct","separating_word":"AABaab","twist":2}"#
        );
        let sep = classify(&CanonicalParams::Fig2a { p: 1, q: 0 }).unwrap();
        assert!(sep.to_json().contains(r#""separating_word":"1""#));
    }

    #[test]
    fn power_pair_examples() {
        assert_eq!(classify_power_pair(&w("A"), &w("BB")).unwrap(), PowerPairClass::Separated);
        assert_eq!(
            classify_power_pair(&w("BB"), &w("bb")).unwrap(),
            PowerPairClass::NonseparatingAnnulus
        );
        assert_eq!(classify_power_pair(&w("AA"), &w("BBB")).unwrap(), PowerPairClass::Separated);
        assert!(matches!(classify_power_pair(&w("A"), &w("AB")), Err(Error::BetaNotProperPower(_))));
        assert!(matches!(classify_power_pair(&w("ABab"), &w("BB")), Err(Error::AlphaNotPrimitiveOrPower(_))));
        assert_eq!(classify_power_pair(&Word::identity(), &w("BB")), Err(Error::TrivialWord));
    }

    #[test]
    fn power_pair_symmetric_under_inversion() {
        for (a, b) in [("A", "BB"), ("ABAB", "baba"), ("AAB", "AABAAB"), ("AABAAB", "baabaa")] {
            let (a, b) = (w(a), w(b));
            let base = classify_power_pair(&a, &b).unwrap();
            assert_eq!(classify_power_pair(&a.inverse(), &b).unwrap(), base);
            assert_eq!(classify_power_pair(&a, &b.inverse()).unwrap(), base);
        }
    }
}
