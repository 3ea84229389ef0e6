//! Underlying graphs of genus-2 Heegaard diagrams.
//!
//! Cutting the handlebody along a complete pair of disks `{D_A, D_B}` leaves a
//! ball whose boundary carries four disk copies `A+, A-, B+, B-`. The arcs of
//! each curve become edges between them; only the multiplicities matter here.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    APlus,
    AMinus,
    BPlus,
    BMinus,
}

impl Vertex {
    pub const ALL: [Vertex; 4] = [Vertex::APlus, Vertex::AMinus, Vertex::BPlus, Vertex::BMinus];

    fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Vertex::APlus => "A+",
            Vertex::AMinus => "A-",
            Vertex::BPlus => "B+",
            Vertex::BMinus => "B-",
        }
    }

    fn from_name(s: &str) -> Option<Vertex> {
        Vertex::ALL.into_iter().find(|v| v.name() == s)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Curve {
    Alpha,
    Beta,
}

impl Curve {
    pub fn name(self) -> &'static str {
        match self {
            Curve::Alpha => "alpha",
            Curve::Beta => "beta",
        }
    }
}

impl FromStr for Curve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Curve> {
        match s {
            "alpha" | "α" => Ok(Curve::Alpha),
            "beta" | "β" => Ok(Curve::Beta),
            _ => Err(Error::UnknownCurve(s.to_string())),
        }
    }
}

/// Symmetric multiplicity table of one curve's edges; loops allowed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct EdgeCounts([[u32; 4]; 4]);

impl EdgeCounts {
    pub fn new() -> EdgeCounts {
        EdgeCounts::default()
    }

    pub fn from_edges(edges: &[(Vertex, Vertex, u32)]) -> EdgeCounts {
        let mut m = EdgeCounts::new();
        for &(v, w, k) in edges {
            m.add(v, w, k);
        }
        m
    }

    pub fn get(&self, v: Vertex, w: Vertex) -> u32 {
        self.0[v.index()][w.index()]
    }

    pub fn set(&mut self, v: Vertex, w: Vertex, k: u32) {
        self.0[v.index()][w.index()] = k;
        self.0[w.index()][v.index()] = k;
    }

    pub fn add(&mut self, v: Vertex, w: Vertex, k: u32) {
        self.set(v, w, self.get(v, w) + k);
    }

    /// Edge endpoints at `v`; a loop counts twice.
    pub fn degree(&self, v: Vertex) -> u32 {
        Vertex::ALL
            .iter()
            .map(|&w| if w == v { 2 * self.get(v, v) } else { self.get(v, w) })
            .sum()
    }

    pub fn total(&self) -> u32 {
        self.pairs().map(|(_, _, k)| k).sum()
    }

    /// Nonzero entries over unordered pairs `v <= w`.
    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex, u32)> + '_ {
        Vertex::ALL.into_iter().enumerate().flat_map(move |(i, v)| {
            Vertex::ALL[i..]
                .iter()
                .map(move |&w| (v, w, self.get(v, w)))
                .filter(|&(_, _, k)| k > 0)
        })
    }

    fn relabeled(&self, r: Relabeling) -> EdgeCounts {
        let mut out = EdgeCounts::new();
        for (v, w, k) in self.pairs() {
            out.set(r.map(v), r.map(w), k);
        }
        out
    }

    fn support(&self) -> Vec<Vertex> {
        Vertex::ALL.into_iter().filter(|&v| self.degree(v) > 0).collect()
    }

    fn neighbours(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        Vertex::ALL
            .into_iter()
            .filter(move |&w| w != v && self.get(v, w) > 0)
    }
}

/// Swapping the two copies of `D_A` and/or of `D_B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Relabeling {
    pub swap_a: bool,
    pub swap_b: bool,
}

impl Relabeling {
    pub fn all() -> [Relabeling; 4] {
        [(false, false), (true, false), (false, true), (true, true)]
            .map(|(swap_a, swap_b)| Relabeling { swap_a, swap_b })
    }

    pub fn map(self, v: Vertex) -> Vertex {
        match v {
            Vertex::APlus if self.swap_a => Vertex::AMinus,
            Vertex::AMinus if self.swap_a => Vertex::APlus,
            Vertex::BPlus if self.swap_b => Vertex::BMinus,
            Vertex::BMinus if self.swap_b => Vertex::BPlus,
            v => v,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HGraph {
    alpha: EdgeCounts,
    beta: EdgeCounts,
}

fn check_curve(curve: Curve, m: &EdgeCounts) -> Result<()> {
    if let Some(v) = Vertex::ALL.into_iter().find(|&v| m.get(v, v) > 0) {
        return Err(Error::LoopEdge {
            curve: curve.name(),
            vertex: v.name().to_string(),
        });
    }
    for (p, q) in [(Vertex::APlus, Vertex::AMinus), (Vertex::BPlus, Vertex::BMinus)] {
        if m.degree(p) != m.degree(q) {
            return Err(Error::ParityViolation {
                curve: curve.name(),
                detail: format!("deg({p}) = {} but deg({q}) = {}", m.degree(p), m.degree(q)),
            });
        }
    }
    Ok(())
}

impl HGraph {
    /// Checks the closed-curve parity condition on both curves.
    pub fn new(alpha: EdgeCounts, beta: EdgeCounts) -> Result<HGraph> {
        check_curve(Curve::Alpha, &alpha)?;
        check_curve(Curve::Beta, &beta)?;
        Ok(HGraph { alpha, beta })
    }

    pub fn edges(&self, curve: Curve) -> &EdgeCounts {
        match curve {
            Curve::Alpha => &self.alpha,
            Curve::Beta => &self.beta,
        }
    }

    pub fn from_json(s: &str) -> Result<HGraph> {
        let raw: GraphJson = serde_json::from_str(s).map_err(|e| Error::Syntax {
            kind: "graph JSON",
            input: e.to_string(),
        })?;
        HGraph::new(parse_counts(&raw.alpha)?, parse_counts(&raw.beta)?)
    }

    pub fn to_json(&self) -> String {
        let raw = GraphJson {
            alpha: counts_to_map(&self.alpha),
            beta: counts_to_map(&self.beta),
        };
        serde_json::to_string_pretty(&raw).expect("graph serializes")
    }

    /// Connectivity of the curve's support; a curve with no edges is not connected.
    pub fn is_connected(&self, curve: Curve) -> bool {
        let m = self.edges(curve);
        let support = m.support();
        !support.is_empty() && components(m, &support, None) == 1
    }

    /// Articulation points of the curve's support (DFS low-link).
    pub fn cut_vertices(&self, curve: Curve) -> Vec<Vertex> {
        let m = self.edges(curve);
        let mut state = LowLink {
            m,
            order: [usize::MAX; 4],
            low: [0; 4],
            counter: 0,
            cut: [false; 4],
        };
        for v in m.support() {
            if state.order[v.index()] == usize::MAX {
                state.visit(v, None);
            }
        }
        Vertex::ALL.into_iter().filter(|v| state.cut[v.index()]).collect()
    }

    fn beta_is_single_b_loop(&self) -> Option<u32> {
        let s = self.beta.get(Vertex::BPlus, Vertex::BMinus);
        (s >= 1 && self.beta.total() == s).then_some(s)
    }

    /// `Some((c, s))` when the graph has the reduced shape up to swapping
    /// `A±` or `B±`: `β` is a single `B+B-` edge and `α` consists of `c`
    /// `A+A-` edges and `s ≥ 2` edges each of `A+B-` and `A-B+`, with `c ≥ s`.
    pub fn matches_fig5c(&self) -> Option<(u32, u32)> {
        if self.beta_is_single_b_loop() != Some(1) {
            return None;
        }
        Relabeling::all()
            .into_iter()
            .find_map(|r| fig5c_shape(&self.alpha.relabeled(r)).filter(|&(c, s)| c >= s))
    }

    /// Certificate that the configuration cannot have minimal `|α ∩ ∂D_B|`.
    pub fn minimality_witness(&self) -> Result<Witness> {
        if self.beta_is_single_b_loop().is_none() {
            return Err(Error::BetaShape);
        }
        for r in Relabeling::all() {
            let m = self.alpha.relabeled(r);
            let get = |v, w| m.get(v, w);
            use Vertex::*;
            let a_loop = get(APlus, AMinus);
            let b_loop = get(BPlus, BMinus);
            if a_loop == 0 && get(APlus, BMinus) > 0 && get(AMinus, BPlus) > 0 && b_loop == 0 {
                return Ok(Witness::Violation(MinimalityViolation::BandsumAcrossDisks));
            }
            if a_loop == 0 && b_loop > 0 && get(APlus, BMinus) > 0 {
                return Ok(Witness::Violation(MinimalityViolation::BandsumPowerPattern {
                    a: get(APlus, BMinus),
                }));
            }
            if let Some((c, s)) = fig5c_shape(&m) {
                if c < s {
                    return Ok(Witness::Violation(MinimalityViolation::BandsumShortLoop { c, s }));
                }
            }
        }
        Ok(Witness::Ok)
    }

    /// Graphviz rendering; fat vertices become labeled nodes.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph heegaard {\n  node [shape=circle];\n");
        for v in Vertex::ALL {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for curve in [Curve::Alpha, Curve::Beta] {
            let colour = match curve {
                Curve::Alpha => "red",
                Curve::Beta => "blue",
            };
            for (v, w, k) in self.edges(curve).pairs() {
                let _ = writeln!(
                    out,
                    "  \"{v}\" -- \"{w}\" [label=\"{}:{k}\", color={colour}];",
                    curve.name()
                );
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn report(&self) -> GraphReport {
        let per_curve = |c: Curve| CurveReport {
            connected: self.is_connected(c),
            cut_vertices: self.cut_vertices(c).iter().map(|v| v.name().to_string()).collect(),
        };
        GraphReport {
            parity: true,
            alpha: per_curve(Curve::Alpha),
            beta: per_curve(Curve::Beta),
            fig5c: self.matches_fig5c().map(|(c, s)| [c, s]),
            minimality: self.minimality_witness().ok(),
        }
    }
}

// Exact reduced shape in the given labeling, without the c >= s condition.
fn fig5c_shape(m: &EdgeCounts) -> Option<(u32, u32)> {
    use Vertex::*;
    let c = m.get(APlus, AMinus);
    let s = m.get(APlus, BMinus);
    let shape = c >= 1
        && s >= 2
        && m.get(AMinus, BPlus) == s
        && m.total() == c + 2 * s;
    shape.then_some((c, s))
}

fn components(m: &EdgeCounts, vertices: &[Vertex], removed: Option<Vertex>) -> usize {
    let live: Vec<Vertex> = vertices.iter().copied().filter(|&v| Some(v) != removed).collect();
    let mut seen = [false; 4];
    let mut count = 0;
    for &start in &live {
        if seen[start.index()] {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        seen[start.index()] = true;
        while let Some(v) = stack.pop() {
            for w in m.neighbours(v) {
                if Some(w) != removed && !seen[w.index()] && live.contains(&w) {
                    seen[w.index()] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

struct LowLink<'a> {
    m: &'a EdgeCounts,
    order: [usize; 4],
    low: [usize; 4],
    counter: usize,
    cut: [bool; 4],
}

impl LowLink<'_> {
    fn visit(&mut self, v: Vertex, parent: Option<Vertex>) {
        let i = v.index();
        self.order[i] = self.counter;
        self.low[i] = self.counter;
        self.counter += 1;
        let mut children = 0;
        for w in self.m.neighbours(v).collect::<Vec<_>>() {
            let j = w.index();
            if self.order[j] == usize::MAX {
                children += 1;
                self.visit(w, Some(v));
                self.low[i] = self.low[i].min(self.low[j]);
                if parent.is_some() && self.low[j] >= self.order[i] {
                    self.cut[i] = true;
                }
            } else if Some(w) != parent {
                self.low[i] = self.low[i].min(self.order[j]);
            }
        }
        if parent.is_none() && children > 1 {
            self.cut[i] = true;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "reason")]
pub enum MinimalityViolation {
    /// `α` has no `A+A-` or `B+B-` edges, only `A+B-` and `A-B+` ones.
    BandsumAcrossDisks,
    /// Reduced shape with fewer `A+A-` edges than `A+B-` edges.
    BandsumShortLoop { c: u32, s: u32 },
    /// No `A+A-` edges, `α` runs along `B+B-`, and `a > 0` edges `A+B-`.
    BandsumPowerPattern { a: u32 },
}

impl MinimalityViolation {
    pub fn name(&self) -> &'static str {
        match self {
            MinimalityViolation::BandsumAcrossDisks => "BandsumAcrossDisks",
            MinimalityViolation::BandsumShortLoop { .. } => "BandsumShortLoop",
            MinimalityViolation::BandsumPowerPattern { .. } => "BandsumPowerPattern",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "status")]
pub enum Witness {
    Ok,
    Violation(MinimalityViolation),
}

pub fn is_connected(g: &HGraph, curve: Curve) -> bool {
    g.is_connected(curve)
}

pub fn cut_vertices(g: &HGraph, curve: Curve) -> Vec<Vertex> {
    g.cut_vertices(curve)
}

pub fn matches_fig5c(g: &HGraph) -> Option<(u32, u32)> {
    g.matches_fig5c()
}

pub fn minimality_witness(g: &HGraph) -> Result<Witness> {
    g.minimality_witness()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveReport {
    pub connected: bool,
    pub cut_vertices: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub parity: bool,
    pub alpha: CurveReport,
    pub beta: CurveReport,
    pub fig5c: Option<[u32; 2]>,
    /// Absent when `β` is not of the form `{B+B-: s}`.
    pub minimality: Option<Witness>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct GraphJson {
    #[serde(default)]
    alpha: BTreeMap<String, u32>,
    #[serde(default)]
    beta: BTreeMap<String, u32>,
}

fn parse_counts(map: &BTreeMap<String, u32>) -> Result<EdgeCounts> {
    let mut m = EdgeCounts::new();
    for (key, &k) in map {
        let bad = || Error::Syntax {
            kind: "edge key",
            input: key.clone(),
        };
        if key.len() != 4 || !key.is_ascii() {
            return Err(bad());
        }
        let v = Vertex::from_name(&key[..2]).ok_or_else(bad)?;
        let w = Vertex::from_name(&key[2..]).ok_or_else(bad)?;
        m.add(v, w, k);
    }
    Ok(m)
}

fn counts_to_map(m: &EdgeCounts) -> BTreeMap<String, u32> {
    m.pairs().map(|(v, w, k)| (format!("{v}{w}"), k)).collect()
}
