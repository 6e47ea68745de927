//! Triality forms of D4 and the exceptional types.

use super::labels::{expand, Label, XEntry, XiClass, YEntry};
use super::manifest::{CaseId, GroupCase};
use crate::arith::QParam;
use crate::endoscopy::ids;

fn xe(label: Label, mult: u64) -> XEntry {
    XEntry { label, mult }
}

fn ye(label: Label, dim: u64, r: String) -> YEntry {
    YEntry { label, dim, endo_ref: vec![r] }
}

/// Vertices present under a congruence condition, as (node, d_x, present).
fn nodes(c: GroupCase, q: QParam) -> Vec<(&'static str, u64, bool)> {
    let (d3, d4, d5) = (q.minus(3) == 1, q.minus(4) == 1, q.minus(5) == 1);
    match c.id {
        CaseId::D4TrialityA => vec![("2", 1, true)],
        CaseId::D4TrialityB | CaseId::D4TrialityC => vec![("0", 1, true), ("134", 1, true)],
        CaseId::E6Ram => vec![("0", 1, true), ("35", 2, d3)],
        CaseId::E8 => vec![
            ("0", 1, true),
            ("1", 1, true),
            ("8", 1, true),
            ("4", 2, d3),
            ("7", 2, d3),
            ("6", 2, d4),
            ("5", 4, d5),
        ],
        CaseId::F4 => vec![("0", 1, true), ("1", 1, true), ("4", 1, true), ("2", 2, d3), ("3", 2, d4)],
        CaseId::G2 => vec![("0", 1, true), ("2", 1, true), ("1", 2, d3)],
        _ => Vec::new(),
    }
}

pub(super) fn x(c: GroupCase, q: QParam) -> Vec<XEntry> {
    let d3 = q.minus(3) == 1;
    let mut out = Vec::new();
    match c.id {
        CaseId::E6Split if d3 => {
            out.push(xe(Label::node("4"), 2));
            for v in ["016", "235"] {
                out.extend(expand(Label::node(v), XiClass::Ram, 6).map(|l| xe(l, 1)));
            }
        }
        CaseId::E6Inner | CaseId::E6Unram if d3 => out.push(xe(Label::node("4"), 2)),
        CaseId::E6Unram => {
            for v in ["0", "2"] {
                out.extend(expand(Label::node(v), XiClass::NotOne, 2).map(|l| xe(l, 1)));
            }
        }
        CaseId::E7Split => {
            out.extend(expand(Label::node("0"), XiClass::Ram, 2).map(|l| xe(l, 1)));
            if d3 {
                out.extend(expand(Label::node("3"), XiClass::Ram, 2).map(|l| xe(l, 2)));
            }
            if q.minus(4) == 1 {
                out.push(xe(Label::node("4"), 2));
            }
        }
        CaseId::E7Inner if q.minus(4) == 1 => out.push(xe(Label::node("4"), 2)),
        _ => {
            for (v, d, present) in nodes(c, q) {
                if present {
                    out.push(xe(Label::node(v), d));
                }
            }
        }
    }
    out
}

pub(super) fn y(c: GroupCase, q: QParam) -> Vec<YEntry> {
    let d3 = q.minus(3) == 1;
    let mut out = Vec::new();
    let tagged = |tag: &str, v: u32| ids::nodes(tag, "016", v);
    match c.id {
        CaseId::E6Split if d3 => {
            out.push(ye(Label::node("0"), 2, ids::principal()));
            for second in ["0", "134"] {
                for (v, l) in expand(Label::node_pair("016", second), XiClass::Ram, 6).enumerate() {
                    out.push(ye(l, 1, tagged("ram3", v as u32)));
                }
            }
        }
        CaseId::E6Inner | CaseId::E6Unram if d3 => out.push(ye(Label::node("0"), 2, ids::principal())),
        CaseId::E6Unram => {
            for second in ["0", "134"] {
                for (v, l) in expand(Label::node_pair("016", second), XiClass::NotOne, 2).enumerate() {
                    out.push(ye(l, 1, tagged("dih3", v as u32)));
                }
            }
        }
        CaseId::E7Split => {
            let r = |e| ids::nodes("ram2", "07", e);
            for (e, l) in expand(Label::node_pair("07", "0"), XiClass::Ram, 2).enumerate() {
                out.push(ye(l, 1, r(e as u32)));
            }
            if d3 {
                for (e, l) in expand(Label::node_pair("07", "35"), XiClass::Ram, 2).enumerate() {
                    out.push(ye(l, 2, r(e as u32)));
                }
            }
            if q.minus(4) == 1 {
                out.push(ye(Label::node("4"), 2, ids::principal()));
            }
        }
        _ => {
            for x in self::x(c, q) {
                out.push(ye(x.label, x.mult, ids::principal()));
            }
        }
    }
    out
}

/// Image of x under the bijection X -> Y.
pub(super) fn phi(c: GroupCase, x: &Label) -> Label {
    let core = |s: &str| Label::node(s);
    let pair = |a: &str, b: &str| Label::node_pair(a, b);
    let mapped = match (c.id, &x.core) {
        (CaseId::E6Split | CaseId::E6Inner | CaseId::E6Unram, super::labels::Core::Node(v)) => match v.as_str() {
            "4" => Some(core("0")),
            "016" | "0" if x.xi.is_some() => Some(pair("016", "0")),
            "235" | "2" if x.xi.is_some() => Some(pair("016", "134")),
            _ => None,
        },
        (CaseId::E7Split, super::labels::Core::Node(v)) => match v.as_str() {
            "0" => Some(pair("07", "0")),
            "3" => Some(pair("07", "35")),
            _ => None,
        },
        _ => None,
    };
    match mapped {
        Some(mut l) => {
            l.xi = x.xi;
            l
        }
        None => x.clone(),
    }
}

pub(super) fn st(c: GroupCase, q: QParam) -> u64 {
    let (d3, d4, d5) = (q.minus(3), q.minus(4), q.minus(5));
    match c.id {
        CaseId::D4TrialityA => 1,
        CaseId::D4TrialityB | CaseId::D4TrialityC => 2,
        CaseId::E6Split | CaseId::E6Unram => 2 * d3,
        CaseId::E6Ram => 1 + 2 * d3,
        CaseId::E7Split => 2 * d4,
        CaseId::E8 => 3 + 4 * d3 + 2 * d4 + 4 * d5,
        CaseId::F4 => 3 + 2 * d3 + 2 * d4,
        CaseId::G2 => 2 * (1 + d3),
        _ => 0,
    }
}

pub(super) fn is_stable(c: GroupCase, l: &Label) -> bool {
    match c.id {
        CaseId::E6Split | CaseId::E6Unram | CaseId::E7Split => l.xi.is_none(),
        CaseId::E6Inner | CaseId::E7Inner => false,
        _ => true,
    }
}
