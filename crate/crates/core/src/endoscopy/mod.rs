//! Elliptic endoscopic data, the centre criterion, local extensions and the
//! endoscopic side of the dimension identity.

mod classical;
mod exceptional;
pub mod ids;

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::arith::QParam;
use crate::cases::{dim_fc_st, CaseId, GroupCase, XiTag};
use crate::diagrams::{DynkinType, Series};
use crate::error::EndoError;

/// Field over which a factor of G'_SC is restricted from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Base {
    F,
    E0,
    #[serde(rename = "E-ramified")]
    ERam,
}

impl Base {
    /// Residue field cardinality seen by the factor.
    pub fn residue(self, q: QParam) -> Result<QParam, EndoError> {
        Ok(match self {
            Base::F | Base::ERam => q,
            Base::E0 => q.squared()?,
        })
    }
}

/// Shape of one simple factor of G'_SC.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorKind {
    Sl,
    SuUnram,
    SuRam,
    /// Spin(2m+1).
    B,
    /// Sp(2m).
    C,
    /// Spin(2m), split, unramified outer or ramified outer form.
    DSplit,
    DUnram,
    DRam,
    /// Anisotropic torus.
    Torus,
    /// A registered group case of rank `m`.
    Group(CaseId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub kind: FactorKind,
    pub m: u32,
    pub base: Base,
    #[serde(rename = "type")]
    pub ty: Option<DynkinType>,
}

impl Factor {
    pub fn new(kind: FactorKind, m: u32, base: Base) -> Self {
        let t = |s, r| DynkinType::new(s, r).ok();
        let ty = match kind {
            FactorKind::Sl | FactorKind::SuUnram | FactorKind::SuRam if m >= 2 => t(Series::A, m - 1),
            FactorKind::B | FactorKind::C if m == 1 => t(Series::A, 1),
            FactorKind::B => t(Series::B, m),
            FactorKind::C => t(Series::C, m),
            FactorKind::DSplit | FactorKind::DUnram | FactorKind::DRam if m == 3 => t(Series::A, 3),
            FactorKind::DSplit | FactorKind::DUnram | FactorKind::DRam => t(Series::D, m),
            FactorKind::Group(id) => t(id.info().series, m),
            _ => None,
        };
        Factor { kind, m, base, ty }
    }

    pub fn f(kind: FactorKind, m: u64) -> Self {
        Factor::new(kind, m as u32, Base::F)
    }

    /// Split simply connected group of the given type.
    pub fn split(ty: DynkinType) -> Self {
        let r = ty.rank();
        let (kind, m) = match ty.series() {
            Series::A => (FactorKind::Sl, r + 1),
            Series::B => (FactorKind::B, r),
            Series::C => (FactorKind::C, r),
            Series::D => (FactorKind::DSplit, r),
            Series::E => (
                FactorKind::Group(match r {
                    6 => CaseId::E6Split,
                    7 => CaseId::E7Split,
                    _ => CaseId::E8,
                }),
                r,
            ),
            Series::F => (FactorKind::Group(CaseId::F4), r),
            Series::G => (FactorKind::Group(CaseId::G2), r),
        };
        Factor::new(kind, m, Base::F)
    }

    pub fn over(mut self, base: Base) -> Self {
        self.base = base;
        self
    }
}

/// dim FC^st of one factor.
pub fn factor_st(f: &Factor, q: QParam) -> Result<u64, EndoError> {
    use FactorKind as K;
    let q = f.base.residue(q)?;
    let m = f.m;
    let case = |id| -> Result<u64, EndoError> { Ok(dim_fc_st(GroupCase::new(id, m)?, q)?) };
    match (f.kind, m) {
        (K::Torus, _) => Ok(1),
        (K::Sl | K::SuUnram | K::SuRam, 0 | 1) => Ok(1),
        (K::Sl, _) | (K::SuUnram | K::SuRam, 2) => Ok(0),
        (K::SuUnram, _) => case(CaseId::AUnram),
        (K::SuRam, _) => case(CaseId::ARam),
        (K::B | K::C | K::DSplit | K::DUnram | K::DRam, 0) => Ok(1),
        (K::B | K::C | K::DSplit, 1) => Ok(0),
        (K::DUnram | K::DRam, 1) => Ok(1),
        (K::DSplit | K::DUnram | K::DRam, 2 | 3) => Ok(0),
        (K::B, _) => case(CaseId::BSplit),
        (K::C, _) => case(CaseId::CSplit),
        (K::DSplit, _) if m.is_multiple_of(2) => case(CaseId::DSplitEven),
        (K::DSplit, _) => case(CaseId::DSplitOdd),
        (K::DUnram, _) if m.is_multiple_of(2) => case(CaseId::DQsUnramEven),
        (K::DUnram, _) => case(CaseId::DQsUnramOdd),
        (K::DRam, _) if m.is_multiple_of(2) => case(CaseId::DQsRamEven),
        (K::DRam, _) => case(CaseId::DQsRamOdd),
        (K::Group(id), _) => case(id),
    }
}

/// Ramification of the field E_O cut out by the stabilizer of a node of
/// the orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ramification {
    /// E_O = F.
    Trivial,
    Unramified,
    Ramified,
    /// Neither unramified nor totally ramified.
    Mixed,
}

impl Ramification {
    pub fn totally_ramified(self) -> bool {
        matches!(self, Ramification::Trivial | Ramification::Ramified)
    }
}

/// The action σ ↦ σ_G' at the level of the diagram: the splitting field
/// shape and the image of named Galois generators in Ω̂.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Action {
    pub name: String,
    pub generators: Vec<(String, String)>,
    pub stabilizer: Ramification,
}

impl Action {
    pub fn new(name: &str, generators: &[(&str, &str)], stabilizer: Ramification) -> Self {
        Action {
            name: name.to_string(),
            generators: generators.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
            stabilizer,
        }
    }

    pub fn trivial() -> Self {
        Action::new("trivial", &[], Ramification::Trivial)
    }
}

/// A generator of Out(G'), with its eigenvalue on FC^st(g') written as a
/// phase modulo `order`, and the extra phase by which an inner form twists
/// it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutGen {
    pub name: String,
    pub order: u32,
    pub natural: u32,
    pub inner: u32,
}

impl OutGen {
    pub fn new(name: &str, order: u32, natural: u32) -> Self {
        OutGen { name: name.to_string(), order, natural: natural % order, inner: 0 }
    }

    pub fn twisted(mut self, inner: u32) -> Self {
        self.inner = inner % self.order;
        self
    }

    pub fn acts_trivially(&self) -> bool {
        (self.natural + self.inner).is_multiple_of(self.order)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Retained,
    DiscardedNotTotallyRamified,
    DiscardedZeroStable,
    DiscardedOutSign,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Retained => "retained",
            Verdict::DiscardedNotTotallyRamified => "discarded-not-totally-ramified",
            Verdict::DiscardedZeroStable => "discarded-zero-stable",
            Verdict::DiscardedOutSign => "discarded-out-sign",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndoDatum {
    pub id: String,
    pub orbit: Vec<String>,
    pub action: Action,
    pub factors: Vec<Factor>,
    pub out: Vec<OutGen>,
    pub out_order: u32,
    pub xi: Option<XiTag>,
    pub verdict: Verdict,
    /// dim FC^st(g')^Out(G'), zero unless retained.
    pub contribution: u64,
}

impl EndoDatum {
    pub(crate) fn new(id: String, orbit: Vec<String>, action: Action, factors: Vec<Factor>) -> Self {
        EndoDatum {
            id,
            orbit,
            action,
            factors,
            out: Vec::new(),
            out_order: 1,
            xi: None,
            verdict: Verdict::Retained,
            contribution: 0,
        }
    }

    pub(crate) fn with_out(mut self, out: Vec<OutGen>) -> Self {
        self.out_order = out.iter().map(|g| g.order).product();
        self.out = out;
        self
    }

    pub(crate) fn with_xi(mut self, xi: XiTag) -> Self {
        self.xi = Some(xi);
        self
    }

    fn settle(mut self, q: QParam) -> Result<Self, EndoError> {
        let mut st = 1;
        for f in &self.factors {
            st *= factor_st(f, q)?;
        }
        self.verdict = if !self.action.stabilizer.totally_ramified() {
            Verdict::DiscardedNotTotallyRamified
        } else if st == 0 {
            Verdict::DiscardedZeroStable
        } else if !self.out.iter().all(OutGen::acts_trivially) {
            Verdict::DiscardedOutSign
        } else {
            Verdict::Retained
        };
        self.contribution = if self.verdict == Verdict::Retained { st } else { 0 };
        Ok(self)
    }
}

/// Node label in the dual affine diagram.
pub(crate) fn node(i: u64) -> String {
    format!("a{i}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CentreVerdict {
    #[serde(rename = "retained")]
    Retained,
    #[serde(rename = "discarded-not-totally-ramified")]
    DiscardedNotTotallyRamified,
}

/// A datum survives only if the field fixed by the stabilizer of a node of
/// its orbit is totally ramified.
pub fn centre_criterion(d: &EndoDatum, _c: GroupCase, _q: QParam) -> CentreVerdict {
    if d.action.stabilizer.totally_ramified() {
        CentreVerdict::Retained
    } else {
        CentreVerdict::DiscardedNotTotallyRamified
    }
}

/// All elliptic endoscopic data classes of the case, each with its verdict.
pub fn enumerate_endo(c: GroupCase, q: QParam) -> Result<Vec<EndoDatum>, EndoError> {
    if !c.id.exists(q) {
        return Err(crate::error::CaseError::Unavailable { case: c.id.as_str(), q: q.get() }.into());
    }
    let raw = match c.id.info().series {
        Series::A | Series::B | Series::C => classical::data(c, q),
        Series::D if c.id.info().rank == crate::cases::RankRule::Fixed(4) => exceptional::data(c, q),
        Series::D => classical::data(c, q),
        _ => exceptional::data(c, q),
    };
    raw.into_iter().map(|d| d.settle(q)).collect()
}

/// dim FC^E(g(F)).
pub fn dim_fc_endo(c: GroupCase, q: QParam) -> Result<u64, EndoError> {
    Ok(enumerate_endo(c, q)?.iter().map(|d| d.contribution).sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtensionShape {
    /// Totally ramified cyclic of degree n.
    CyclicN,
    /// Galois over F, dihedral of order 2n, containing the base.
    DihedralOverQuadratic,
    Biquadratic,
    Cyclic4ContainingE,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionQuery {
    pub base: Base,
    pub shape: ExtensionShape,
    pub n: u64,
    pub q: QParam,
}

/// Existence bit and number of local extensions of the given shape.
pub fn extension_exists(x: ExtensionQuery) -> Result<(u8, u64), EndoError> {
    use ExtensionShape as S;
    let q = x.q;
    let found = |count: u64| if count > 0 { (1, count) } else { (0, 0) };
    match (x.base, x.shape) {
        (Base::F, S::CyclicN) if x.n >= 1 => Ok(found(q.minus(x.n) * x.n)),
        (Base::E0, S::DihedralOverQuadratic) if x.n >= 2 => Ok(found(q.plus(x.n))),
        (Base::ERam, S::DihedralOverQuadratic) if x.n >= 2 => Ok(found(u64::from(x.n == 2))),
        (Base::F, S::Biquadratic) => Ok((1, 1)),
        (Base::ERam, S::Cyclic4ContainingE) => Ok(found(2 * q.minus(4))),
        _ => Err(EndoError::UnsupportedShape(format!("{:?} over {:?} (n = {})", x.shape, x.base, x.n))),
    }
}

#[cfg(test)]
mod tests;
