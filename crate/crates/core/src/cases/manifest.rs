//! Stable identifiers for every registered p-adic group case.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::arith::QParam;
use crate::diagrams::Series;
use crate::error::CaseError;

/// Quasi-split form of the group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Form {
    Split,
    UnramQuad,
    RamQuad,
    TrialityA,
    TrialityB,
    TrialityC,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Split => "split",
            Form::UnramQuad => "unram-quad",
            Form::RamQuad => "ram-quad",
            Form::TrialityA => "triality-A",
            Form::TrialityB => "triality-B",
            Form::TrialityC => "triality-C",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankRule {
    Fixed(u32),
    AtLeast { min: u32, parity: Option<Parity> },
}

impl RankRule {
    pub fn admits(self, n: u32) -> bool {
        match self {
            RankRule::Fixed(r) => n == r,
            RankRule::AtLeast { min, parity } => {
                n >= min
                    && match parity {
                        None => true,
                        Some(Parity::Even) => n.is_multiple_of(2),
                        Some(Parity::Odd) => n % 2 == 1,
                    }
            }
        }
    }

    /// Admissible ranks up to `max`.
    pub fn ranks(self, max: u32) -> impl Iterator<Item = u32> {
        (1..=max).filter(move |&n| self.admits(n))
    }
}

macro_rules! cases {
    ($( $var:ident => $id:literal, $series:ident, $form:ident, $inner:expr, $rank:expr, $partner:expr; )*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CaseId { $( $var ),* }

        impl CaseId {
            pub const ALL: &'static [CaseId] = &[ $( CaseId::$var ),* ];

            pub fn as_str(self) -> &'static str {
                match self { $( CaseId::$var => $id ),* }
            }

            pub fn info(self) -> CaseInfo {
                match self {
                    $( CaseId::$var => CaseInfo {
                        id: $id,
                        series: Series::$series,
                        form: Form::$form,
                        inner: $inner,
                        rank: $rank,
                        quasi_split_partner: $partner,
                    } ),*
                }
            }
        }
    };
}

const fn at_least(min: u32) -> RankRule {
    RankRule::AtLeast { min, parity: None }
}
const fn even(min: u32) -> RankRule {
    RankRule::AtLeast {
        min,
        parity: Some(Parity::Even),
    }
}
const fn odd(min: u32) -> RankRule {
    RankRule::AtLeast {
        min,
        parity: Some(Parity::Odd),
    }
}

use CaseId as C;

cases! {
    ASplit => "A-split", A, Split, None, at_least(2), None;
    AInner => "A-inner", A, Split, Some("dA"), at_least(2), Some(C::ASplit);
    AUnram => "A-unram", A, UnramQuad, None, at_least(3), None;
    AUnramInner => "A-unram-inner", A, UnramQuad, Some("2A'"), even(4), Some(C::AUnram);
    ARam => "A-ram", A, RamQuad, None, at_least(3), None;
    ARamInner => "A-ram-inner", A, RamQuad, Some("2A''"), even(4), Some(C::ARam);
    BSplit => "B-split", B, Split, None, at_least(2), None;
    BInner => "B-inner", B, Split, Some("2B"), at_least(2), Some(C::BSplit);
    CSplit => "C-split", C, Split, None, at_least(2), None;
    CInner => "C-inner", C, Split, Some("2C"), at_least(2), Some(C::CSplit);
    DSplitEven => "D-split-even", D, Split, None, even(4), None;
    DInnerClassicalEven => "D-inner-classical-even", D, Split, Some("2D'"), even(4), Some(C::DSplitEven);
    DInnerNonclassicalEven => "D-inner-nonclassical-even", D, Split, Some("2D''"), even(4), Some(C::DSplitEven);
    DSplitOdd => "D-split-odd", D, Split, None, odd(5), None;
    DInnerClassicalOdd => "D-inner-classical-odd", D, Split, Some("2D'"), odd(5), Some(C::DSplitOdd);
    DInnerNonclassicalOdd => "D-inner-nonclassical-odd", D, Split, Some("4D"), odd(5), Some(C::DSplitOdd);
    DQsUnramEven => "D-qs-unram-even", D, UnramQuad, None, even(4), None;
    DQsUnramEvenInner => "D-qs-unram-even-inner", D, UnramQuad, Some("4D"), even(4), Some(C::DQsUnramEven);
    DQsUnramOdd => "D-qs-unram-odd", D, UnramQuad, None, odd(5), None;
    DQsUnramOddInner => "D-qs-unram-odd-inner", D, UnramQuad, Some("2D'"), odd(5), Some(C::DQsUnramOdd);
    DQsRamEven => "D-qs-ram-even", D, RamQuad, None, even(4), None;
    DQsRamEvenInner => "D-qs-ram-even-inner", D, RamQuad, Some("2D'"), even(4), Some(C::DQsRamEven);
    DQsRamOdd => "D-qs-ram-odd", D, RamQuad, None, odd(5), None;
    DQsRamOddInner => "D-qs-ram-odd-inner", D, RamQuad, Some("2D'"), odd(5), Some(C::DQsRamOdd);
    D4TrialityA => "D4-triality-A", D, TrialityA, None, RankRule::Fixed(4), None;
    D4TrialityB => "D4-triality-B", D, TrialityB, None, RankRule::Fixed(4), None;
    D4TrialityC => "D4-triality-C", D, TrialityC, None, RankRule::Fixed(4), None;
    E6Split => "E6-split", E, Split, None, RankRule::Fixed(6), None;
    E6Inner => "E6-inner", E, Split, Some("3E6"), RankRule::Fixed(6), Some(C::E6Split);
    E6Unram => "E6-unram", E, UnramQuad, None, RankRule::Fixed(6), None;
    E6Ram => "E6-ram", E, RamQuad, None, RankRule::Fixed(6), None;
    E7Split => "E7-split", E, Split, None, RankRule::Fixed(7), None;
    E7Inner => "E7-inner", E, Split, Some("2E7"), RankRule::Fixed(7), Some(C::E7Split);
    E8 => "E8", E, Split, None, RankRule::Fixed(8), None;
    F4 => "F4", F, Split, None, RankRule::Fixed(4), None;
    G2 => "G2", G, Split, None, RankRule::Fixed(2), None;
}

/// Static description of one case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CaseInfo {
    pub id: &'static str,
    pub series: Series,
    pub form: Form,
    /// Name of the inner form, `None` for the quasi-split group.
    pub inner: Option<&'static str>,
    pub rank: RankRule,
    #[serde(serialize_with = "ser_partner")]
    pub quasi_split_partner: Option<CaseId>,
}

fn ser_partner<S: serde::Serializer>(p: &Option<CaseId>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(c) => s.serialize_some(c.as_str()),
        None => s.serialize_none(),
    }
}

impl CaseInfo {
    pub fn is_quasi_split(&self) -> bool {
        self.inner.is_none()
    }
}

impl CaseId {
    /// Whether the group exists over a field with residue cardinality `q`:
    /// the ramified cubic forms need the matching cubic extension.
    pub fn exists(self, q: QParam) -> bool {
        match self {
            CaseId::D4TrialityB => q.minus(3) == 1,
            CaseId::D4TrialityC => q.plus(3) == 1,
            _ => true,
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseId {
    type Err = CaseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseId::ALL
            .iter()
            .copied()
            .find(|c| c.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| CaseError::UnknownCase(s.to_string()))
    }
}

impl Serialize for CaseId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for CaseId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A case together with its rank parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupCase {
    pub id: CaseId,
    pub n: u32,
}

impl GroupCase {
    pub fn new(id: CaseId, n: u32) -> Result<Self, CaseError> {
        if !id.info().rank.admits(n) {
            return Err(CaseError::RankOutOfRange {
                case: id.as_str(),
                n,
            });
        }
        Ok(GroupCase { id, n })
    }

    /// The case at its only admissible rank, for the exceptional entries.
    pub fn fixed(id: CaseId) -> Result<Self, CaseError> {
        match id.info().rank {
            RankRule::Fixed(r) => Ok(GroupCase { id, n: r }),
            RankRule::AtLeast { .. } => Err(CaseError::RankOutOfRange { case: id.as_str(), n: 0 }),
        }
    }

    pub fn info(self) -> CaseInfo {
        self.id.info()
    }

    pub fn quasi_split(self) -> GroupCase {
        match self.info().quasi_split_partner {
            Some(id) => GroupCase { id, n: self.n },
            None => self,
        }
    }
}

impl fmt::Display for GroupCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.id, self.n)
    }
}

/// Machine-readable manifest of every case.
pub fn manifest() -> Vec<CaseInfo> {
    CaseId::ALL.iter().map(|c| c.info()).collect()
}
