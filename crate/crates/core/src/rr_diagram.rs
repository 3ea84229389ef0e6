//! Genus-2 R-R diagrams.
//!
//! A diagram has two handles (once-punctured tori), each carrying up to three
//! bands of parallel connections, and an annulus whose arcs join band ends.
//! Every band is labeled by its signed intersection numbers with the cutting
//! disk boundary `∂D_X` and with a longitude `l` of the handle. Curves are
//! closed walks alternating between band traversals and annulus arcs.
//!
//! JSON layout:
//!
//! ```json
//! {"handles": {"A": {"bands": [{"mult": 1, "label": [2, 1]}]}, "B": {"bands": [...]}},
//!  "arcs": [{"from": "A.0.+", "to": "B.0.-", "mult": 1}],
//!  "curves": {"alpha": ["A.0.+", "arc:0.+", "B.0.+", "arc:1.+"], "beta": [...]}}
//! ```
//!
//! Traversing band `k` of handle `X` forward (`X.k.+`) enters at end `X.k.-`
//! and leaves at `X.k.+`; `arc:i.+` runs from the arc's `from` endpoint to its
//! `to` endpoint.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{reduce, CyclicWord, Generator, Letter, Word};

pub const ALPHA: &str = "alpha";
pub const BETA: &str = "beta";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    fn sign(self) -> i64 {
        match self {
            Direction::Forward => 1,
            Direction::Backward => -1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Direction::Forward => '+',
            Direction::Backward => '-',
        }
    }

    fn parse(s: &str) -> Option<Direction> {
        match s {
            "+" => Some(Direction::Forward),
            "-" => Some(Direction::Backward),
            _ => None,
        }
    }
}

fn parse_handle(s: &str) -> Option<Generator> {
    match s {
        "A" => Some(Generator::A),
        "B" => Some(Generator::B),
        _ => None,
    }
}

/// One of the two ends of a band; `+` is where a forward traversal exits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Endpoint {
    pub handle: Generator,
    pub band: usize,
    pub end: Direction,
}

impl Endpoint {
    pub fn new(handle: Generator, band: usize, end: Direction) -> Endpoint {
        Endpoint { handle, band, end }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}.{}", self.handle, self.band, self.end.symbol())
    }
}

impl FromStr for Endpoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Endpoint> {
        let bad = || Error::Syntax {
            kind: "endpoint",
            input: s.to_string(),
        };
        let parts: Vec<&str> = s.trim().split('.').collect();
        let [h, k, e] = parts[..] else {
            return Err(bad());
        };
        Ok(Endpoint {
            handle: parse_handle(h).ok_or_else(bad)?,
            band: k.parse().map_err(|_| bad())?,
            end: Direction::parse(e).ok_or_else(bad)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Traverse {
        handle: Generator,
        band: usize,
        dir: Direction,
    },
    Arc {
        id: usize,
        dir: Direction,
    },
}

impl Step {
    pub fn traverse(handle: Generator, band: usize, dir: Direction) -> Step {
        Step::Traverse { handle, band, dir }
    }

    pub fn arc(id: usize, dir: Direction) -> Step {
        Step::Arc { id, dir }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Traverse { handle, band, dir } => write!(f, "{handle}.{band}.{}", dir.symbol()),
            Step::Arc { id, dir } => write!(f, "arc:{id}.{}", dir.symbol()),
        }
    }
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(s: &str) -> Result<Step> {
        let bad = || Error::Syntax {
            kind: "curve step",
            input: s.to_string(),
        };
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("arc:") {
            let (id, dir) = rest.split_once('.').ok_or_else(bad)?;
            return Ok(Step::Arc {
                id: id.parse().map_err(|_| bad())?,
                dir: Direction::parse(dir).ok_or_else(bad)?,
            });
        }
        let e: Endpoint = s.parse().map_err(|_| bad())?;
        Ok(Step::Traverse {
            handle: e.handle,
            band: e.band,
            dir: e.end,
        })
    }
}

macro_rules! string_serde {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

string_serde!(Endpoint);
string_serde!(Step);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Band {
    pub mult: u32,
    /// Signed intersection numbers with `(∂D_X, l)`.
    pub label: [i64; 2],
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HandleLabel {
    #[serde(default)]
    pub bands: Vec<Band>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Handles {
    #[serde(rename = "A")]
    pub a: HandleLabel,
    #[serde(rename = "B")]
    pub b: HandleLabel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AnnulusArc {
    pub from: Endpoint,
    pub to: Endpoint,
    pub mult: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RRDiagram {
    pub handles: Handles,
    #[serde(default)]
    pub arcs: Vec<AnnulusArc>,
    #[serde(default)]
    pub curves: BTreeMap<String, Vec<Step>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind")]
pub enum Violation {
    TooManyBands { handle: char, count: usize },
    ZeroMultiplicity { handle: char, band: usize },
    /// Connection label pair not coprime.
    GcdViolation { handle: char, labels: Vec<i64> },
    /// Three bands whose labels are not of the form `p, r, p + r`.
    ThreeBandSum { handle: char },
    /// Two nonparallel connections whose label pairs have determinant other than ±1.
    LongitudeDeterminant { handle: char, det: i64 },
    MissingBand { endpoint: String },
    EndpointDegree { endpoint: String, arcs: u32, band: u32 },
    EmptyCurve { curve: String },
    UnknownBand { curve: String, step: usize },
    UnknownArc { curve: String, step: usize },
    /// Consecutive steps do not meet, or two band traversals are adjacent.
    BrokenWalk { curve: String, step: usize },
    BandUsage { handle: char, band: usize, used: u32, mult: u32 },
    ArcUsage { arc: usize, used: u32, mult: u32 },
}

impl Violation {
    pub fn name(&self) -> &'static str {
        match self {
            Violation::TooManyBands { .. } => "TooManyBands",
            Violation::ZeroMultiplicity { .. } => "ZeroMultiplicity",
            Violation::GcdViolation { .. } => "GcdViolation",
            Violation::ThreeBandSum { .. } => "ThreeBandSum",
            Violation::LongitudeDeterminant { .. } => "LongitudeDeterminant",
            Violation::MissingBand { .. } => "MissingBand",
            Violation::EndpointDegree { .. } => "EndpointDegree",
            Violation::EmptyCurve { .. } => "EmptyCurve",
            Violation::UnknownBand { .. } => "UnknownBand",
            Violation::UnknownArc { .. } => "UnknownArc",
            Violation::BrokenWalk { .. } => "BrokenWalk",
            Violation::BandUsage { .. } => "BandUsage",
            Violation::ArcUsage { .. } => "ArcUsage",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        write!(f, "{}: ", self.name())?;
        match self {
            TooManyBands { handle, count } => write!(f, "handle {handle} has {count} bands (at most 3)"),
            ZeroMultiplicity { handle, band } => write!(f, "band {handle}.{band} has multiplicity 0"),
            GcdViolation { handle, labels } => write!(f, "handle {handle} labels {labels:?} are not coprime"),
            ThreeBandSum { handle } => write!(f, "handle {handle} labels are not p, r, p + r"),
            LongitudeDeterminant { handle, det } => {
                write!(f, "handle {handle} label pairs have determinant {det}, expected ±1")
            }
            MissingBand { endpoint } => write!(f, "arc endpoint {endpoint} names no band"),
            EndpointDegree { endpoint, arcs, band } => {
                write!(f, "endpoint {endpoint} meets {arcs} arc strands but its band has {band}")
            }
            EmptyCurve { curve } => write!(f, "curve {curve} has no steps"),
            UnknownBand { curve, step } => write!(f, "curve {curve} step {step} names no band"),
            UnknownArc { curve, step } => write!(f, "curve {curve} step {step} names no arc"),
            BrokenWalk { curve, step } => write!(f, "curve {curve} is not a closed walk at step {step}"),
            BandUsage { handle, band, used, mult } => {
                write!(f, "band {handle}.{band} is traversed {used} times but has multiplicity {mult}")
            }
            ArcUsage { arc, used, mult } => {
                write!(f, "arc {arc} is traversed {used} times but has multiplicity {mult}")
            }
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn det(x: [i64; 2], y: [i64; 2]) -> i64 {
    x[0] * y[1] - x[1] * y[0]
}

fn validate_handle(handle: char, label: &HandleLabel, out: &mut Vec<Violation>) {
    let bands = &label.bands;
    if bands.len() > 3 {
        out.push(Violation::TooManyBands {
            handle,
            count: bands.len(),
        });
        return;
    }
    for (i, band) in bands.iter().enumerate() {
        if band.mult == 0 {
            out.push(Violation::ZeroMultiplicity { handle, band: i });
        }
    }
    match bands.as_slice() {
        [] => {}
        [only] => {
            if gcd(only.label[0], only.label[1]) != 1 {
                out.push(Violation::GcdViolation {
                    handle,
                    labels: only.label.to_vec(),
                });
            }
        }
        [x, y] => {
            if gcd(x.label[0], y.label[0]) != 1 {
                out.push(Violation::GcdViolation {
                    handle,
                    labels: vec![x.label[0], y.label[0]],
                });
            } else {
                let d = det(x.label, y.label);
                if d.abs() != 1 {
                    out.push(Violation::LongitudeDeterminant { handle, det: d });
                }
            }
        }
        [_, _, _] => {
            // Some band must be the sum of the other two, which form a basis.
            let labels: Vec<[i64; 2]> = bands.iter().map(|b| b.label).collect();
            let sum_of_others = (0..3).find(|&k| {
                let (p, r) = (labels[(k + 1) % 3], labels[(k + 2) % 3]);
                labels[k][0] == p[0] + r[0] && labels[k][1] == p[1] + r[1]
            });
            match sum_of_others {
                None => out.push(Violation::ThreeBandSum { handle }),
                Some(k) => {
                    let (p, r) = (labels[(k + 1) % 3], labels[(k + 2) % 3]);
                    if gcd(p[0], r[0]) != 1 {
                        out.push(Violation::GcdViolation {
                            handle,
                            labels: vec![p[0], r[0]],
                        });
                    } else if det(p, r).abs() != 1 {
                        out.push(Violation::LongitudeDeterminant {
                            handle,
                            det: det(p, r),
                        });
                    }
                }
            }
        }
        _ => unreachable!(),
    }
}

impl RRDiagram {
    pub fn handle(&self, g: Generator) -> &HandleLabel {
        match g {
            Generator::A => &self.handles.a,
            Generator::B => &self.handles.b,
        }
    }

    pub fn band(&self, handle: Generator, band: usize) -> Option<&Band> {
        self.handle(handle).bands.get(band)
    }

    pub fn curve(&self, name: &str) -> Result<&[Step]> {
        self.curves
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::UnknownCurve(name.to_string()))
    }

    pub fn from_json(s: &str) -> Result<RRDiagram> {
        serde_json::from_str(s).map_err(|e| Error::Syntax {
            kind: "diagram JSON",
            input: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("diagram serializes")
    }

    /// Every violated constraint; empty iff the diagram is well formed.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        validate_handle('A', &self.handles.a, &mut out);
        validate_handle('B', &self.handles.b, &mut out);

        // Arc strands meeting each band end.
        let mut degree: BTreeMap<Endpoint, u32> = BTreeMap::new();
        for arc in &self.arcs {
            for e in [arc.from, arc.to] {
                if self.band(e.handle, e.band).is_none() {
                    out.push(Violation::MissingBand {
                        endpoint: e.to_string(),
                    });
                }
                *degree.entry(e).or_default() += arc.mult;
            }
        }
        for g in [Generator::A, Generator::B] {
            for (k, band) in self.handle(g).bands.iter().enumerate() {
                for end in [Direction::Backward, Direction::Forward] {
                    let e = Endpoint::new(g, k, end);
                    let arcs = degree.get(&e).copied().unwrap_or(0);
                    if arcs != band.mult {
                        out.push(Violation::EndpointDegree {
                            endpoint: e.to_string(),
                            arcs,
                            band: band.mult,
                        });
                    }
                }
            }
        }

        let mut band_use: BTreeMap<(Generator, usize), u32> = BTreeMap::new();
        let mut arc_use: BTreeMap<usize, u32> = BTreeMap::new();
        for (name, steps) in &self.curves {
            if steps.is_empty() {
                out.push(Violation::EmptyCurve { curve: name.clone() });
                continue;
            }
            let mut resolved = Vec::with_capacity(steps.len());
            let mut ok = true;
            for (i, step) in steps.iter().enumerate() {
                match self.step_ends(step) {
                    Ok(ends) => resolved.push(ends),
                    Err(Error::UnknownArc(_)) => {
                        out.push(Violation::UnknownArc {
                            curve: name.clone(),
                            step: i,
                        });
                        ok = false;
                    }
                    Err(_) => {
                        out.push(Violation::UnknownBand {
                            curve: name.clone(),
                            step: i,
                        });
                        ok = false;
                    }
                }
                match step {
                    Step::Traverse { handle, band, .. } => *band_use.entry((*handle, *band)).or_default() += 1,
                    Step::Arc { id, .. } => *arc_use.entry(*id).or_default() += 1,
                }
            }
            if !ok {
                continue;
            }
            let n = steps.len();
            for i in 0..n {
                let next = (i + 1) % n;
                let alternates = matches!(steps[i], Step::Traverse { .. }) != matches!(steps[next], Step::Traverse { .. });
                if !alternates || resolved[i].1 != resolved[next].0 {
                    out.push(Violation::BrokenWalk {
                        curve: name.clone(),
                        step: next,
                    });
                    break;
                }
            }
        }
        for g in [Generator::A, Generator::B] {
            for (k, band) in self.handle(g).bands.iter().enumerate() {
                let used = band_use.get(&(g, k)).copied().unwrap_or(0);
                if used != band.mult {
                    out.push(Violation::BandUsage {
                        handle: g.as_char(),
                        band: k,
                        used,
                        mult: band.mult,
                    });
                }
            }
        }
        for (id, arc) in self.arcs.iter().enumerate() {
            let used = arc_use.get(&id).copied().unwrap_or(0);
            if used != arc.mult {
                out.push(Violation::ArcUsage {
                    arc: id,
                    used,
                    mult: arc.mult,
                });
            }
        }
        out
    }

    // Entry and exit endpoints of a step.
    fn step_ends(&self, step: &Step) -> Result<(Endpoint, Endpoint)> {
        match *step {
            Step::Traverse { handle, band, dir } => {
                if self.band(handle, band).is_none() {
                    return Err(Error::UnlabeledBand {
                        handle: handle.as_char(),
                        band,
                    });
                }
                let plus = Endpoint::new(handle, band, Direction::Forward);
                let minus = Endpoint::new(handle, band, Direction::Backward);
                Ok(match dir {
                    Direction::Forward => (minus, plus),
                    Direction::Backward => (plus, minus),
                })
            }
            Step::Arc { id, dir } => {
                let arc = self.arcs.get(id).ok_or(Error::UnknownArc(id))?;
                Ok(match dir {
                    Direction::Forward => (arc.from, arc.to),
                    Direction::Backward => (arc.to, arc.from),
                })
            }
        }
    }

    /// The cyclic word a curve represents: a band on handle `X` with
    /// `∂D_X`-label `u` traversed in direction `d` contributes `X^{u·d}`.
    pub fn trace_word(&self, curve: &str) -> Result<CyclicWord> {
        let steps = self.curve(curve)?;
        let mut letters: Vec<Letter> = Vec::new();
        for step in steps {
            match *step {
                Step::Traverse { handle, band, dir } => {
                    let b = self.band(handle, band).ok_or(Error::UnlabeledBand {
                        handle: handle.as_char(),
                        band,
                    })?;
                    let k = b.label[0] * dir.sign();
                    letters.extend(Word::power_of(handle, k).letters());
                }
                Step::Arc { id, .. } => {
                    self.arcs.get(id).ok_or(Error::UnknownArc(id))?;
                }
            }
        }
        Ok(CyclicWord::new(&reduce(letters)))
    }
}

pub fn validate(d: &RRDiagram) -> Vec<Violation> {
    d.validate()
}

pub fn trace_word(d: &RRDiagram, curve: &str) -> Result<CyclicWord> {
    d.trace_word(curve)
}

/// Parameters of the three canonical diagrams of disjoint primitive pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "lowercase")]
pub enum CanonicalParams {
    /// `α` meets only `∂D_A`, once; the pair represents `(A, B)`.
    Fig1a,
    /// `α` meets `∂D_B` once; its A-connection has label `(p, q)`.
    Fig2a { p: i64, q: i64 },
    /// `α` meets `∂D_B` in `a + b` points; A-bands carry `p` and `p + ε`.
    Fig3a { a: i64, b: i64, p: i64, eps: i64 },
}

impl CanonicalParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        match *self {
            CanonicalParams::Fig1a => Ok(()),
            CanonicalParams::Fig2a { p, q } => {
                if p == 0 {
                    return bad("fig2a requires p != 0".into());
                }
                if gcd(p, q) != 1 {
                    return bad(format!("fig2a requires gcd(p, q) = 1, got gcd({p}, {q}) = {}", gcd(p, q)));
                }
                Ok(())
            }
            CanonicalParams::Fig3a { a, b, p, eps } => {
                if a < 0 || b < 0 {
                    return bad(format!("fig3a requires a, b >= 0, got ({a}, {b})"));
                }
                if gcd(a, b) != 1 {
                    return bad(format!("fig3a requires gcd(a, b) = 1, got gcd({a}, {b}) = {}", gcd(a, b)));
                }
                if a + b <= 1 {
                    return bad(format!("fig3a requires a + b > 1, got {}", a + b));
                }
                if eps != 1 && eps != -1 {
                    return bad(format!("fig3a requires eps = ±1, got {eps}"));
                }
                if p.min(p + eps) <= 1 {
                    return bad(format!("fig3a requires min(p, p + eps) > 1, got {}", p.min(p + eps)));
                }
                Ok(())
            }
        }
    }
}

/// A-exponents `m_1 .. m_{a+b}` of the balanced arrangement:
/// `m_i = p + ε·(⌊i·b/(a+b)⌋ − ⌊(i−1)·b/(a+b)⌋)`.
pub fn sturmian_exponents(a: i64, b: i64, p: i64, eps: i64) -> Result<Vec<i64>> {
    CanonicalParams::Fig3a { a, b, p, eps }.validate()?;
    let j = a + b;
    Ok((1..=j).map(|i| p + eps * ((i * b) / j - ((i - 1) * b) / j)).collect())
}

pub fn alpha_word_fig3a(a: i64, b: i64, p: i64, eps: i64) -> Result<CyclicWord> {
    let exps = sturmian_exponents(a, b, p, eps)?;
    let word = exps.iter().fold(Word::identity(), |acc, &m| {
        acc.multiply(&Word::power_of(Generator::A, m))
            .multiply(&Word::generator(Generator::B))
    });
    Ok(CyclicWord::new(&word))
}

fn band(mult: u32, label: [i64; 2]) -> Band {
    Band { mult, label }
}

fn ep(s: &str) -> Endpoint {
    s.parse().expect("static endpoint")
}

fn steps(list: &[&str]) -> Vec<Step> {
    list.iter().map(|s| s.parse().expect("static step")).collect()
}

/// Builds the canonical diagram. `β` always uses one B-connection closed up
/// by an inessential annulus arc; connections of `α` on the B-handle are
/// parallel to it and share its band.
pub fn build_canonical(params: &CanonicalParams) -> Result<RRDiagram> {
    params.validate()?;
    let mut d = RRDiagram::default();
    match *params {
        CanonicalParams::Fig1a => {
            d.handles.a.bands = vec![band(1, [1, 0])];
            d.handles.b.bands = vec![band(1, [1, 0])];
            d.arcs = vec![
                AnnulusArc { from: ep("A.0.+"), to: ep("A.0.-"), mult: 1 },
                AnnulusArc { from: ep("B.0.+"), to: ep("B.0.-"), mult: 1 },
            ];
            d.curves.insert(ALPHA.into(), steps(&["A.0.+", "arc:0.+"]));
            d.curves.insert(BETA.into(), steps(&["B.0.+", "arc:1.+"]));
        }
        CanonicalParams::Fig2a { p, q } => {
            d.handles.a.bands = vec![band(1, [p, q])];
            d.handles.b.bands = vec![band(2, [1, 0])];
            d.arcs = vec![
                AnnulusArc { from: ep("A.0.+"), to: ep("B.0.-"), mult: 1 },
                AnnulusArc { from: ep("B.0.+"), to: ep("A.0.-"), mult: 1 },
                AnnulusArc { from: ep("B.0.+"), to: ep("B.0.-"), mult: 1 },
            ];
            d.curves.insert(ALPHA.into(), steps(&["A.0.+", "arc:0.+", "B.0.+", "arc:1.+"]));
            d.curves.insert(BETA.into(), steps(&["B.0.+", "arc:2.+"]));
        }
        CanonicalParams::Fig3a { a, b, p, eps } => {
            let exps = sturmian_exponents(a, b, p, eps)?;
            let s = (a + b) as u32;
            // Band 0 carries exponent p, band 1 carries p + ε; the two
            // longitude labels make the label pairs a basis.
            d.handles.a.bands = vec![band(a as u32, [p, 1]), band(b as u32, [p + eps, 1])];
            d.handles.b.bands = vec![band(s + 1, [1, 0])];
            let band_of: Vec<usize> = exps.iter().map(|&m| usize::from(m != p)).collect();
            let count = |k: usize| band_of.iter().filter(|&&x| x == k).count() as u32;
            // arcs 0,1: A.k.+ -> B.0.-; arcs 2,3: B.0.+ -> A.k.-; arc 4: beta.
            d.arcs = vec![
                AnnulusArc { from: ep("A.0.+"), to: ep("B.0.-"), mult: count(0) },
                AnnulusArc { from: ep("A.1.+"), to: ep("B.0.-"), mult: count(1) },
                AnnulusArc { from: ep("B.0.+"), to: ep("A.0.-"), mult: count(0) },
                AnnulusArc { from: ep("B.0.+"), to: ep("A.1.-"), mult: count(1) },
                AnnulusArc { from: ep("B.0.+"), to: ep("B.0.-"), mult: 1 },
            ];
            let j = band_of.len();
            let mut alpha = Vec::with_capacity(4 * j);
            for i in 0..j {
                let k = band_of[i];
                let next = band_of[(i + 1) % j];
                alpha.push(Step::traverse(Generator::A, k, Direction::Forward));
                alpha.push(Step::arc(k, Direction::Forward));
                alpha.push(Step::traverse(Generator::B, 0, Direction::Forward));
                alpha.push(Step::arc(2 + next, Direction::Forward));
            }
            d.curves.insert(ALPHA.into(), alpha);
            d.curves.insert(BETA.into(), steps(&["B.0.+", "arc:4.+"]));
        }
    }
    debug_assert!(d.validate().is_empty(), "{:?}", d.validate());
    Ok(d)
}
