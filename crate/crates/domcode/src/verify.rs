//! Membership tests for the five code classes, with re-checkable witnesses.
//!
//! [`verify`] applies the raw defining conditions. For the SLD and DLD
//! classes, [`verify_by_characterization`] applies the equivalent pairwise /
//! pointwise forms; the two routes are implemented independently and the test
//! suite cross-checks them.
//!
//! Witnesses are deterministic: the first violation in vertex-index order
//! (pairs in lexicographic order).

use std::fmt;
use std::str::FromStr;

use crate::bitset::VertexSet;
use crate::graph::{iset, Code, Graph};
use crate::{Error, Result};

/// The five code classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CodeClass {
    /// Dominating: every vertex has a nonempty I-set.
    Dom,
    /// Locating-dominating: non-codewords have nonempty, pairwise distinct I-sets.
    Ld,
    /// Self-locating-dominating: for every non-codeword `u`,
    /// `⋂_{c ∈ I(u)} N[c] = {u}`.
    Sld,
    /// Solid-locating-dominating: `I(u) ∖ I(v) ≠ ∅` for distinct non-codewords,
    /// and every non-codeword is dominated.
    Dld,
    /// Identifying: all vertices (codewords included) have nonempty, pairwise
    /// distinct I-sets.
    Id,
}

impl CodeClass {
    pub const ALL: [CodeClass; 5] = [
        CodeClass::Dom,
        CodeClass::Ld,
        CodeClass::Sld,
        CodeClass::Dld,
        CodeClass::Id,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CodeClass::Dom => "DOM",
            CodeClass::Ld => "LD",
            CodeClass::Sld => "SLD",
            CodeClass::Dld => "DLD",
            CodeClass::Id => "ID",
        }
    }
}

impl fmt::Display for CodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CodeClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<CodeClass> {
        match s.to_ascii_uppercase().as_str() {
            "DOM" => Ok(CodeClass::Dom),
            "LD" => Ok(CodeClass::Ld),
            "SLD" => Ok(CodeClass::Sld),
            "DLD" => Ok(CodeClass::Dld),
            "ID" => Ok(CodeClass::Id),
            other => Err(Error::Parse(format!(
                "unknown code class `{other}` (expected DOM, LD, SLD, DLD or ID)"
            ))),
        }
    }
}

/// What a failing verdict points at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// The code itself is empty.
    EmptyCode,
    /// Vertex `u` has an empty I-set.
    EmptyIset,
    /// `I(u) = I(v)` for the offending pair.
    EqualIsets,
    /// `I(u) ∖ I(v) = ∅` for the offending ordered pair.
    Containment,
    /// The closed neighborhoods of `I(u)` intersect in more than the required
    /// singleton; `v` is an extra element.
    IntersectionTooBig,
}

impl WitnessKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessKind::EmptyCode => "empty-code",
            WitnessKind::EmptyIset => "empty-iset",
            WitnessKind::EqualIsets => "equal-isets",
            WitnessKind::Containment => "containment",
            WitnessKind::IntersectionTooBig => "intersection-too-big",
        }
    }
}

/// A concrete violation, re-checkable on the same graph and code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub u: Option<usize>,
    pub v: Option<usize>,
}

/// Outcome of a verification.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub ok: bool,
    pub witness: Option<Witness>,
    pub detail: String,
}

impl Verdict {
    fn pass() -> Verdict {
        Verdict {
            ok: true,
            witness: None,
            detail: "ok".into(),
        }
    }

    fn fail(kind: WitnessKind, u: Option<usize>, v: Option<usize>, detail: String) -> Verdict {
        Verdict {
            ok: false,
            witness: Some(Witness { kind, u, v }),
            detail,
        }
    }
}

fn lbl(g: &Graph, v: usize) -> String {
    g.label(v).to_string()
}

/// Decides whether `code` is a `cls`-code on `g` by the raw definition.
pub fn verify(g: &Graph, code: &Code, cls: CodeClass) -> Result<Verdict> {
    code.ensure_belongs(g)?;
    if code.is_empty() {
        return Ok(Verdict::fail(
            WitnessKind::EmptyCode,
            None,
            None,
            "a code is a nonempty set of vertices".into(),
        ));
    }
    let c = code.members();
    let verdict = match cls {
        CodeClass::Dom => check_domination(g, c, false),
        CodeClass::Id => check_domination(g, c, false)
            .or_else(|| check_distinct_isets(g, c, false)),
        CodeClass::Ld => check_domination(g, c, true)
            .or_else(|| check_distinct_isets(g, c, true)),
        CodeClass::Sld => check_sld_raw(g, c),
        CodeClass::Dld => check_domination(g, c, true).or_else(|| check_dld_pairs(g, c)),
    };
    Ok(verdict.unwrap_or_else(Verdict::pass))
}

/// Nonempty I-set for every vertex (or every non-codeword).
fn check_domination(g: &Graph, c: &VertexSet, skip_codewords: bool) -> Option<Verdict> {
    for u in 0..g.n() {
        if skip_codewords && c.contains(u) {
            continue;
        }
        if !g.closed_nbhd(u).intersects(c) {
            return Some(Verdict::fail(
                WitnessKind::EmptyIset,
                Some(u),
                None,
                format!("vertex {} has an empty I-set", lbl(g, u)),
            ));
        }
    }
    None
}

/// Pairwise distinct I-sets over all vertices (or all non-codewords).
fn check_distinct_isets(g: &Graph, c: &VertexSet, skip_codewords: bool) -> Option<Verdict> {
    let keep: Vec<usize> = (0..g.n())
        .filter(|&u| !skip_codewords || !c.contains(u))
        .collect();
    for (i, &u) in keep.iter().enumerate() {
        let iu = g.closed_nbhd(u).intersection(c);
        for &v in &keep[i + 1..] {
            if iu == g.closed_nbhd(v).intersection(c) {
                return Some(Verdict::fail(
                    WitnessKind::EqualIsets,
                    Some(u),
                    Some(v),
                    format!("I({}) = I({})", lbl(g, u), lbl(g, v)),
                ));
            }
        }
    }
    None
}

/// Raw SLD: for every non-codeword `u`, `I(u)` is nonempty and the closed
/// neighborhoods of its members intersect exactly in `{u}`.
fn check_sld_raw(g: &Graph, c: &VertexSet) -> Option<Verdict> {
    for u in 0..g.n() {
        if c.contains(u) {
            continue;
        }
        let iu = g.closed_nbhd(u).intersection(c);
        if iu.is_empty() {
            return Some(Verdict::fail(
                WitnessKind::EmptyIset,
                Some(u),
                None,
                format!("vertex {} has an empty I-set", lbl(g, u)),
            ));
        }
        let mut meet = VertexSet::full(g.n());
        for cw in iu.iter() {
            meet.intersect_with(g.closed_nbhd(cw));
        }
        meet.remove(u);
        if let Some(extra) = meet.first() {
            return Some(Verdict::fail(
                WitnessKind::IntersectionTooBig,
                Some(u),
                Some(extra),
                format!(
                    "closed neighborhoods of I({}) also share {}",
                    lbl(g, u),
                    lbl(g, extra)
                ),
            ));
        }
    }
    None
}

/// Raw DLD pair condition: `I(u) ∖ I(v) ≠ ∅` for distinct non-codewords.
fn check_dld_pairs(g: &Graph, c: &VertexSet) -> Option<Verdict> {
    let non: Vec<usize> = (0..g.n()).filter(|&u| !c.contains(u)).collect();
    for &u in &non {
        let iu = g.closed_nbhd(u).intersection(c);
        for &v in &non {
            if u != v && iu.difference(g.closed_nbhd(v)).is_empty() {
                return Some(Verdict::fail(
                    WitnessKind::Containment,
                    Some(u),
                    Some(v),
                    format!("I({}) ∖ I({}) is empty", lbl(g, u), lbl(g, v)),
                ));
            }
        }
    }
    None
}

/// Decides SLD/DLD membership by the characterization equivalent to the raw
/// definition: SLD ⟺ `I(u) ∖ I(v) ≠ ∅` for every non-codeword `u` and every
/// other vertex `v`; DLD ⟺ every non-codeword `u` has a nonempty I-set and
/// `(⋂_{c ∈ I(u)} N[c]) ∖ C = {u}`.
pub fn verify_by_characterization(g: &Graph, code: &Code, cls: CodeClass) -> Result<Verdict> {
    code.ensure_belongs(g)?;
    if !matches!(cls, CodeClass::Sld | CodeClass::Dld) {
        return Err(Error::InvalidParameter(format!(
            "characterization form exists only for SLD and DLD, not {cls}"
        )));
    }
    if code.is_empty() {
        return Ok(Verdict::fail(
            WitnessKind::EmptyCode,
            None,
            None,
            "a code is a nonempty set of vertices".into(),
        ));
    }
    let c = code.members();
    let verdict = match cls {
        CodeClass::Sld => check_sld_char(g, c),
        CodeClass::Dld => check_dld_char(g, c),
        _ => unreachable!(),
    };
    Ok(verdict.unwrap_or_else(Verdict::pass))
}

fn check_sld_char(g: &Graph, c: &VertexSet) -> Option<Verdict> {
    for u in 0..g.n() {
        if c.contains(u) {
            continue;
        }
        let iu = g.closed_nbhd(u).intersection(c);
        for v in 0..g.n() {
            if u != v && iu.difference(g.closed_nbhd(v)).is_empty() {
                return Some(Verdict::fail(
                    WitnessKind::Containment,
                    Some(u),
                    Some(v),
                    format!("I({}) ∖ I({}) is empty", lbl(g, u), lbl(g, v)),
                ));
            }
        }
    }
    None
}

fn check_dld_char(g: &Graph, c: &VertexSet) -> Option<Verdict> {
    for u in 0..g.n() {
        if c.contains(u) {
            continue;
        }
        let iu = g.closed_nbhd(u).intersection(c);
        if iu.is_empty() {
            return Some(Verdict::fail(
                WitnessKind::EmptyIset,
                Some(u),
                None,
                format!("vertex {} has an empty I-set", lbl(g, u)),
            ));
        }
        let mut meet = VertexSet::full(g.n());
        for cw in iu.iter() {
            meet.intersect_with(g.closed_nbhd(cw));
        }
        meet.difference_with(c);
        meet.remove(u);
        if let Some(extra) = meet.first() {
            return Some(Verdict::fail(
                WitnessKind::IntersectionTooBig,
                Some(u),
                Some(extra),
                format!(
                    "non-codeword {} also lies in every N[c], c ∈ I({})",
                    lbl(g, extra),
                    lbl(g, u)
                ),
            ));
        }
    }
    None
}

/// All classes the code satisfies, in [`CodeClass::ALL`] order.
pub fn classify(g: &Graph, code: &Code) -> Result<Vec<CodeClass>> {
    CodeClass::ALL
        .into_iter()
        .filter_map(|cls| match verify(g, code, cls) {
            Ok(v) if v.ok => Some(Ok(cls)),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        })
        .collect()
}
