//! Labels of the X and Y index sets.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Which sub-family of a classical index set a pair belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    Plain,
    Nr,
    Ram,
    Plus,
    Minus,
}

impl Branch {
    fn prefix(self) -> &'static str {
        match self {
            Branch::Plain => "",
            Branch::Nr => "nr",
            Branch::Ram => "ram",
            Branch::Plus => "+",
            Branch::Minus => "-",
        }
    }
}

/// The character sets used to index multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum XiClass {
    /// Characters attached to the tori of SL(n) and SU(n).
    #[serde(rename = "Xi_n^ram")]
    RamN,
    #[serde(rename = "Xi_n")]
    N,
    #[serde(rename = "Xi^nr")]
    Nr,
    #[serde(rename = "Xi^ram")]
    Ram,
    /// The full group of characters for split even D.
    #[serde(rename = "Xi")]
    Full,
    #[serde(rename = "Xi~")]
    Tilde,
    #[serde(rename = "Xi'")]
    Prime,
    #[serde(rename = "Xi_0")]
    Zero,
    #[serde(rename = "Xi_!=1")]
    NotOne,
}

impl XiClass {
    pub fn name(self) -> &'static str {
        match self {
            XiClass::RamN => "Xi_n^ram",
            XiClass::N => "Xi_n",
            XiClass::Nr => "Xi^nr",
            XiClass::Ram => "Xi^ram",
            XiClass::Full => "Xi",
            XiClass::Tilde => "Xi~",
            XiClass::Prime => "Xi'",
            XiClass::Zero => "Xi_0",
            XiClass::NotOne => "Xi_!=1",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct XiTag {
    pub class: XiClass,
    pub index: u32,
}

impl fmt::Display for XiTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.class.name(), self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Core {
    Pair { branch: Branch, a: u64, b: u64 },
    /// Exceptional vertex, named by the concatenated node indices.
    Node(String),
    NodePair(String, String),
    /// A bare character, used when the index set is a character group.
    Char,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Label {
    pub core: Core,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<XiTag>,
}

impl Label {
    pub fn pair(branch: Branch, a: u64, b: u64) -> Self {
        Label { core: Core::Pair { branch, a, b }, xi: None }
    }

    pub fn node(s: &str) -> Self {
        Label { core: Core::Node(s.to_string()), xi: None }
    }

    pub fn node_pair(a: &str, b: &str) -> Self {
        Label { core: Core::NodePair(a.to_string(), b.to_string()), xi: None }
    }

    pub fn char(class: XiClass, index: u32) -> Self {
        Label { core: Core::Char, xi: Some(XiTag { class, index }) }
    }

    pub fn with_xi(mut self, class: XiClass, index: u32) -> Self {
        self.xi = Some(XiTag { class, index });
        self
    }

    pub fn ab(&self) -> Option<(Branch, u64, u64)> {
        match self.core {
            Core::Pair { branch, a, b } => Some((branch, a, b)),
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xi = self.xi.map(|x| format!(",{x}")).unwrap_or_default();
        match &self.core {
            Core::Pair { branch, a, b } => write!(f, "{}({a},{b}{xi})", branch.prefix()),
            Core::Node(s) if self.xi.is_none() => f.write_str(s),
            Core::Node(s) => write!(f, "({s}{xi})"),
            Core::NodePair(a, b) => write!(f, "({a},{b}{xi})"),
            Core::Char => write!(f, "({})", self.xi.map(|x| x.to_string()).unwrap_or_default()),
        }
    }
}

/// One element of X with its multiplicity d_x.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XEntry {
    pub label: Label,
    pub mult: u64,
}

/// One element of Y with the dimension it contributes and the endoscopic
/// data it is built from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct YEntry {
    pub label: Label,
    pub dim: u64,
    pub endo_ref: Vec<String>,
}

/// Repeat `label` once per element of a character set of size `card`.
pub(crate) fn expand(label: Label, class: XiClass, card: u32) -> impl Iterator<Item = Label> {
    (0..card).map(move |i| label.clone().with_xi(class, i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(Label::pair(Branch::Plain, 4, 3).to_string(), "(4,3)");
        assert_eq!(
            Label::pair(Branch::Nr, 0, 5).with_xi(XiClass::Nr, 1).to_string(),
            "nr(0,5,Xi^nr#1)"
        );
        assert_eq!(Label::node("016").to_string(), "016");
        assert_eq!(Label::node_pair("016", "134").to_string(), "(016,134)");
    }

    #[test]
    fn json_roundtrip() {
        let l = Label::node_pair("07", "35").with_xi(XiClass::Ram, 1);
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(serde_json::from_str::<Label>(&s).unwrap(), l);
    }
}
