//! The X and Y index sets of every case, with multiplicities, and the
//! stable dimensions.

mod exceptional;
pub mod labels;
pub mod manifest;
mod type_a;
mod type_bc;
mod type_d;

pub use labels::{Branch, Core, Label, XEntry, XiClass, XiTag, YEntry};
pub use manifest::{manifest, CaseId, CaseInfo, Form, GroupCase, Parity, RankRule};

use crate::arith::QParam;
use crate::diagrams::Series;
use crate::error::CaseError;

#[derive(Clone, Copy)]
enum Family {
    A,
    BC,
    D,
    Exceptional,
}

fn family(c: GroupCase) -> Family {
    let info = c.info();
    match (info.series, info.rank) {
        (Series::A, _) => Family::A,
        (Series::B | Series::C, _) => Family::BC,
        (Series::D, RankRule::Fixed(_)) => Family::Exceptional,
        (Series::D, _) => Family::D,
        _ => Family::Exceptional,
    }
}

fn check(c: GroupCase, q: QParam) -> Result<(), CaseError> {
    if !c.info().rank.admits(c.n) {
        return Err(CaseError::RankOutOfRange { case: c.id.as_str(), n: c.n });
    }
    if !c.id.exists(q) {
        return Err(CaseError::Unavailable { case: c.id.as_str(), q: q.get() });
    }
    Ok(())
}

#[allow(non_snake_case)]
pub fn enumerate_X(c: GroupCase, q: QParam) -> Result<Vec<XEntry>, CaseError> {
    check(c, q)?;
    Ok(match family(c) {
        Family::A => type_a::x(c, q),
        Family::BC => type_bc::x(c, q),
        Family::D => type_d::x(c, q),
        Family::Exceptional => exceptional::x(c, q),
    })
}

#[allow(non_snake_case)]
pub fn enumerate_Y(c: GroupCase, q: QParam) -> Result<Vec<YEntry>, CaseError> {
    check(c, q)?;
    Ok(match family(c) {
        Family::A => type_a::y(c, q),
        Family::BC => type_bc::y(c, q),
        Family::D => type_d::y(c, q),
        Family::Exceptional => exceptional::y(c, q),
    })
}

/// dim FC(g(F)).
pub fn dim_fc(c: GroupCase, q: QParam) -> Result<u64, CaseError> {
    Ok(enumerate_X(c, q)?.iter().map(|x| x.mult).sum())
}

/// dim FC^st(g(F)) by its closed form.
pub fn dim_fc_st(c: GroupCase, q: QParam) -> Result<u64, CaseError> {
    if !c.info().is_quasi_split() {
        return Err(CaseError::NotQuasiSplit(c.id.as_str()));
    }
    if !c.info().rank.admits(c.n) {
        return Err(CaseError::RankOutOfRange { case: c.id.as_str(), n: c.n });
    }
    Ok(match family(c) {
        Family::A => type_a::st(c),
        Family::BC => type_bc::st(c),
        Family::D => type_d::st(c),
        Family::Exceptional => exceptional::st(c, q),
    })
}

/// The subset X^st of X spanning the stable functions.
pub fn x_st(c: GroupCase, q: QParam) -> Result<Vec<XEntry>, CaseError> {
    if !c.info().is_quasi_split() {
        return Err(CaseError::NotQuasiSplit(c.id.as_str()));
    }
    let xs = enumerate_X(c, q)?;
    Ok(xs.into_iter().filter(|x| is_stable(c, &x.label)).collect())
}

fn is_stable(c: GroupCase, l: &Label) -> bool {
    match family(c) {
        Family::A => type_a::is_stable(c, l),
        Family::BC => type_bc::is_stable(c, l),
        Family::D => type_d::is_stable(c, l),
        Family::Exceptional => exceptional::is_stable(c, l),
    }
}

/// φ on the exceptional cases, where it is a finite table.
pub(crate) fn exceptional_phi(c: GroupCase, x: &Label) -> Option<Label> {
    matches!(family(c), Family::Exceptional).then(|| exceptional::phi(c, x))
}

#[cfg(test)]
mod tests;
