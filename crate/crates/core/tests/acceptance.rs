//! Acceptance suite: each criterion prints one PASS/FAIL line.
//!
//! Run with `cargo test -p handlebody --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use handlebody::classifier::{classify, classify_power_pair, PairClass, PowerPairClass};
use handlebody::heegaard_graph::Relabeling;
use handlebody::oracle::{brute_is_basis, cyclically_reduced_words, enumerate_primitives, reduced_words};
use handlebody::rr_diagram::alpha_word_fig3a;
use handlebody::{
    is_basis_pair, is_primitive, nielsen_generators, Automorphism, CanonicalParams, Curve, CyclicWord,
    EdgeCounts, Generator, HGraph, Letter, MinimalityViolation, Vertex, Witness, Word,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    failures: Vec<String>,
    detail: String,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome { failures: Vec::new(), detail: String::new() }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn rotations(letters: &[Letter]) -> impl Iterator<Item = Vec<Letter>> + '_ {
    (0..letters.len()).map(move |i| [&letters[i..], &letters[..i]].concat())
}

fn naive_conjugate(u: &CyclicWord, v: &CyclicWord) -> bool {
    u.len() == v.len() && rotations(u.letters()).any(|r| r == v.letters())
}

fn naive_conjugate_up_to_inversion(u: &CyclicWord, v: &CyclicWord) -> bool {
    naive_conjugate(u, v) || naive_conjugate(u, &v.inverse())
}

// A nontrivial rotation mapping the word to itself means it is a proper power.
fn naive_proper_power(c: &CyclicWord) -> bool {
    let l = c.letters();
    (1..l.len()).any(|i| rotations(l).nth(i).unwrap() == l)
}

fn canonical_classes(max_len: usize) -> BTreeSet<CyclicWord> {
    cyclically_reduced_words(max_len).iter().map(CyclicWord::new).collect()
}

fn criterion_primitivity() -> Outcome {
    let mut out = Outcome::new();
    let oracle = match enumerate_primitives(12) {
        Ok(set) => set,
        Err(e) => {
            out.failures.push(format!("enumeration failed: {e}"));
            return out;
        }
    };
    let classes = canonical_classes(12);
    let mut checked = 0usize;
    let mut primitive = 0usize;
    for c in &classes {
        let (x, y) = c.abelianize();
        if gcd(x, y) != 1 {
            continue;
        }
        checked += 1;
        let fast = is_primitive(c.word());
        primitive += fast as usize;
        let slow = oracle.contains(c);
        out.check(fast == slow, || format!("{c}: is_primitive={fast}, oracle={slow}"));
    }
    out.check(primitive == oracle.len(), || {
        format!("{} primitive classes found but oracle has {}", primitive, oracle.len())
    });
    out.detail = format!("{checked} coprime classes, {primitive} primitive");
    out
}

fn random_automorphism(rng: &mut ChaCha8Rng, gens: &[Automorphism]) -> Automorphism {
    let steps = rng.gen_range(1..=10);
    (0..steps).fold(Automorphism::identity(), |f, _| gens.choose(rng).unwrap().compose(&f))
}

fn random_letter(rng: &mut ChaCha8Rng) -> Word {
    Word::letter(*Letter::ALL.choose(rng).unwrap())
}

fn criterion_basis() -> Outcome {
    let mut out = Outcome::new();
    let words = reduced_words(10);
    let mut exhaustive = 0usize;
    for u in &words {
        for v in words.iter().take_while(|v| u.len() + v.len() <= 10) {
            exhaustive += 1;
            let fast = is_basis_pair(u, v);
            match brute_is_basis(u, v, 10) {
                Ok(slow) => out.check(fast == slow, || format!("({u}, {v}): commutator={fast}, nielsen={slow}")),
                Err(e) => out.check(false, || format!("({u}, {v}): {e}")),
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let gens = nielsen_generators();
    let (mut random, mut bases) = (0usize, 0usize);
    while random < 10_000 {
        let f = random_automorphism(&mut rng, &gens);
        let (mut u, mut v) = (f.image_a().clone(), f.image_b().clone());
        // Every other pair is perturbed by a letter, which usually breaks the basis.
        if random % 2 == 1 {
            let x = random_letter(&mut rng);
            if rng.gen() {
                u = u.multiply(&x);
            } else {
                v = x.multiply(&v);
            }
        }
        if u.len() + v.len() > 16 {
            continue;
        }
        random += 1;
        let fast = is_basis_pair(&u, &v);
        bases += fast as usize;
        match brute_is_basis(&u, &v, 16) {
            Ok(slow) => out.check(fast == slow, || format!("({u}, {v}): commutator={fast}, nielsen={slow}")),
            Err(e) => out.check(false, || format!("({u}, {v}): {e}")),
        }
    }
    out.detail = format!("{exhaustive} exhaustive pairs, {random} random pairs ({bases} bases)");
    out
}

fn fig3a_grid() -> Vec<CanonicalParams> {
    let mut grid = Vec::new();
    for a in 0..=10i64 {
        for b in 0..=(10 - a) {
            for eps in [1i64, -1] {
                for min_exp in 2..=5i64 {
                    let p = if eps == 1 { min_exp } else { min_exp + 1 };
                    let params = CanonicalParams::Fig3a { a, b, p, eps };
                    if params.validate().is_ok() {
                        grid.push(params);
                    }
                }
            }
        }
    }
    grid
}

fn criterion_fig3a_sweep() -> Outcome {
    let mut out = Outcome::new();
    let grid = fig3a_grid();
    for params in &grid {
        let CanonicalParams::Fig3a { a, b, p, eps } = *params else { unreachable!() };
        let word = match alpha_word_fig3a(a, b, p, eps) {
            Ok(w) => w,
            Err(e) => {
                out.check(false, || format!("{params:?}: {e}"));
                continue;
            }
        };
        out.check(is_primitive(word.word()), || format!("{params:?}: {word} not primitive"));
        let syllables = word.syllables().unwrap();
        let mut a_exps: Vec<i64> = syllables
            .iter()
            .filter(|s| s.generator == Generator::A)
            .map(|s| s.exponent)
            .collect();
        a_exps.sort_unstable();
        let b_exps_ok = syllables
            .iter()
            .filter(|s| s.generator == Generator::B)
            .all(|s| s.exponent == 1);
        let mut expect: Vec<i64> = std::iter::repeat(p)
            .take(a as usize)
            .chain(std::iter::repeat(p + eps).take(b as usize))
            .collect();
        expect.sort_unstable();
        out.check(a_exps == expect && b_exps_ok, || {
            format!("{params:?}: exponents {a_exps:?}, expected {expect:?}")
        });
    }
    out.detail = format!("{} parameter sets", grid.len());
    out
}

// q = p·s ± 1 for some integer s, by direct search.
fn search_type_ii(p: i64, q: i64) -> bool {
    let bound = q.abs() + p.abs() + 2;
    (-bound..=bound).any(|s| q == p * s + 1 || q == p * s - 1)
}

// Smallest |r| with p·s − r·q = ±1 for some s, by direct search.
fn search_min_twist(p: i64, q: i64) -> Option<i64> {
    let bound = 4 * (p.abs() + q.abs()) + 2;
    (0..p.abs().max(1))
        .find(|&r| (-bound..=bound).any(|s| (p * s - r * q).abs() == 1 || (p * s + r * q).abs() == 1))
}

fn fig2a_grid() -> Vec<(i64, i64)> {
    let mut grid = Vec::new();
    for p in -12i64..=12 {
        for q in -30i64..=30 {
            if p != 0 && gcd(p, q) == 1 {
                grid.push((p, q));
            }
        }
    }
    grid
}

fn criterion_classification() -> Outcome {
    let mut out = Outcome::new();
    let grid = fig2a_grid();
    for &(p, q) in &grid {
        let c = match classify(&CanonicalParams::Fig2a { p, q }) {
            Ok(c) => c,
            Err(e) => {
                out.check(false, || format!("fig2a({p},{q}): {e}"));
                continue;
            }
        };
        let both = search_type_ii(p, q);
        let separated = p.abs() == 1;
        out.check(c.type_i, || format!("fig2a({p},{q}) not type I"));
        out.check(c.separated == separated, || format!("fig2a({p},{q}): separated={}", c.separated));
        out.check(c.type_ii == both, || format!("fig2a({p},{q}): type_II={} search={both}", c.type_ii));
        out.check(separated || c.type_ii || c.product_structure == handlebody::ProductStructure::TwistedProduct, || {
            format!("fig2a({p},{q}): type I only but {:?}", c.product_structure)
        });
        let searched = search_min_twist(p, q);
        out.check(searched == Some(c.twist_parameter.abs()), || {
            format!("fig2a({p},{q}): twist {} but search gives {searched:?}", c.twist_parameter)
        });
    }
    for params in fig3a_grid() {
        match classify(&params) {
            Ok(c) => out.check(!c.type_i && c.type_ii && !c.separated, || format!("{params:?}: {c:?}")),
            Err(e) => out.check(false, || format!("{params:?}: {e}")),
        }
    }
    match classify(&CanonicalParams::Fig1a) {
        Ok(c) => out.check(c.separated && c.type_i && c.type_ii, || format!("fig1a: {c:?}")),
        Err(e) => out.check(false, || format!("fig1a: {e}")),
    }
    out.detail = format!("{} fig2a pairs", grid.len());
    out
}

fn commutator_string(n: i64) -> String {
    let (up, down) = if n >= 0 { ("A", "a") } else { ("a", "A") };
    let k = n.unsigned_abs() as usize;
    format!("{}B{}b", up.repeat(k), down.repeat(k))
}

fn criterion_separating_word() -> Outcome {
    let mut out = Outcome::new();
    let mut all: Vec<CanonicalParams> = vec![CanonicalParams::Fig1a];
    all.extend(fig2a_grid().into_iter().map(|(p, q)| CanonicalParams::Fig2a { p, q }));
    all.extend(fig3a_grid());
    let classes: Vec<PairClass> = all.iter().filter_map(|p| classify(p).ok()).collect();
    out.check(classes.len() == all.len(), || "some classification failed".into());
    for c in &classes {
        let g = &c.separating_word;
        out.check(g.abelianize() == (0, 0), || format!("{g}: abelianization {:?}", g.abelianize()));
        out.check(!is_primitive(g.word()), || format!("{g} is primitive"));
        let expect = CyclicWord::new(&commutator_string(c.twist_parameter).parse::<Word>().unwrap());
        out.check(*g == expect, || format!("twist {}: got {g}, expected {expect}", c.twist_parameter));
    }
    out.detail = format!("{} classifications", classes.len());
    out
}

const ALPHA_PAIRS: [(Vertex, Vertex); 6] = [
    (Vertex::APlus, Vertex::AMinus),
    (Vertex::APlus, Vertex::BPlus),
    (Vertex::APlus, Vertex::BMinus),
    (Vertex::AMinus, Vertex::BPlus),
    (Vertex::AMinus, Vertex::BMinus),
    (Vertex::BPlus, Vertex::BMinus),
];

fn multiplicity_vectors(total: u32) -> Vec<[u32; 6]> {
    fn go(i: usize, left: u32, cur: &mut [u32; 6], out: &mut Vec<[u32; 6]>) {
        if i == 6 {
            out.push(*cur);
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            go(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(0, total, &mut [0; 6], &mut out);
    out
}

// The four conclusions checked one by one on a single relabeling, plus the
// counting constraints c >= s >= 2.
fn brute_fig5c(m: &[[u32; 4]; 4], beta_ok: bool) -> Option<(u32, u32)> {
    if !beta_ok {
        return None;
    }
    let idx = |v: Vertex| v as usize;
    let get = |v: Vertex, w: Vertex| m[idx(v)][idx(w)];
    use Vertex::*;
    for r in Relabeling::all() {
        let g = |v, w| get(r.map(v), r.map(w));
        let a_plus_to_b_minus = g(APlus, BMinus) > 0;
        let a_plus_not_to_b_plus = g(APlus, BPlus) == 0;
        let a_loops_present = g(APlus, AMinus) > 0;
        let no_b_loops = g(BPlus, BMinus) == 0;
        if !(a_plus_to_b_minus && a_plus_not_to_b_plus && a_loops_present && no_b_loops) {
            continue;
        }
        let (c, s) = (g(APlus, AMinus), g(APlus, BMinus));
        let shape_ok = g(AMinus, BPlus) == s && g(AMinus, BMinus) == 0;
        if shape_ok && s >= 2 && c >= s {
            return Some((c, s));
        }
    }
    None
}

fn criterion_graph_scan() -> Outcome {
    let mut out = Outcome::new();
    let beta = EdgeCounts::from_edges(&[(Vertex::BPlus, Vertex::BMinus, 1)]);
    let mut scanned = 0usize;
    let mut matched = 0usize;
    let mut seen: BTreeSet<&'static str> = BTreeSet::new();
    for total in 0..=8 {
        for mults in multiplicity_vectors(total) {
            if mults.iter().sum::<u32>() != total {
                continue;
            }
            let mut table = [[0u32; 4]; 4];
            let edges: Vec<(Vertex, Vertex, u32)> = ALPHA_PAIRS
                .iter()
                .zip(mults)
                .map(|(&(v, w), k)| {
                    table[v as usize][w as usize] = k;
                    table[w as usize][v as usize] = k;
                    (v, w, k)
                })
                .collect();
            let Ok(g) = HGraph::new(EdgeCounts::from_edges(&edges), beta) else {
                continue;
            };
            scanned += 1;
            let fast = g.matches_fig5c();
            let slow = brute_fig5c(&table, true);
            out.check(fast.is_some() == slow.is_some(), || format!("{mults:?}: fig5c {fast:?} vs brute {slow:?}"));
            let witness = g.minimality_witness();
            if fast.is_some() {
                matched += 1;
                out.check(witness == Ok(Witness::Ok), || format!("{mults:?}: fig5c but {witness:?}"));
                let cut = g.cut_vertices(Curve::Alpha);
                out.check(cut.contains(&Vertex::APlus) && cut.contains(&Vertex::AMinus), || {
                    format!("{mults:?}: cut vertices {cut:?}")
                });
            }
            if let Ok(Witness::Violation(v)) = witness {
                seen.insert(v.name());
            }
        }
    }
    let all = [
        MinimalityViolation::BandsumAcrossDisks,
        MinimalityViolation::BandsumShortLoop { c: 0, s: 0 },
        MinimalityViolation::BandsumPowerPattern { a: 0 },
    ];
    for v in all {
        out.check(seen.contains(v.name()), || format!("violation {} never produced", v.name()));
    }
    out.detail = format!("{scanned} graphs, {matched} fig5c matches, violations {seen:?}");
    out
}

fn criterion_power_pairs() -> Outcome {
    let mut out = Outcome::new();
    let classes = canonical_classes(8);
    let powers: Vec<&CyclicWord> = classes.iter().filter(|c| naive_proper_power(c)).collect();
    let primitives: Vec<&CyclicWord> = classes.iter().filter(|c| is_primitive(c.word())).collect();
    let mut pairs = 0usize;
    let mut annuli = 0usize;
    for alpha in primitives.iter().chain(powers.iter()) {
        for beta in &powers {
            pairs += 1;
            let expect = if naive_conjugate_up_to_inversion(alpha, beta) {
                PowerPairClass::NonseparatingAnnulus
            } else {
                PowerPairClass::Separated
            };
            annuli += (expect == PowerPairClass::NonseparatingAnnulus) as usize;
            let got = classify_power_pair(alpha.word(), beta.word());
            out.check(got == Ok(expect), || format!("({alpha}, {beta}): {got:?}, expected {expect:?}"));
        }
    }
    out.detail = format!(
        "{} primitives, {} proper powers, {pairs} pairs, {annuli} annuli",
        primitives.len(),
        powers.len()
    );
    out
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 7] = [
        (1, "primitivity agrees with orbit enumeration", criterion_primitivity, Some(Duration::from_secs(60))),
        (2, "commutator basis test agrees with Nielsen reduction", criterion_basis, None),
        (3, "fig3a words are primitive with balanced exponents", criterion_fig3a_sweep, None),
        (4, "classification table", criterion_classification, None),
        (5, "separating word contract", criterion_separating_word, None),
        (6, "heegaard graph exhaustive scan", criterion_graph_scan, Some(Duration::from_secs(10))),
        (7, "power pair dichotomy", criterion_power_pairs, None),
    ];
    let mut failed = 0;
    for (n, name, run, limit) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let Some(limit) = limit {
            outcome.check(elapsed <= limit, || format!("took {elapsed:?}, limit {limit:?}"));
        }
        let status = if outcome.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} criterion {n}: {name} [{}; {:.2}s]", outcome.detail, elapsed.as_secs_f64());
        for f in outcome.failures.iter().take(10) {
            println!("    {f}");
        }
        if outcome.failures.len() > 10 {
            println!("    ... {} more", outcome.failures.len() - 10);
        }
        failed += !outcome.failures.is_empty() as u32;
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
