//! The bijections X -> Y, the order on X, the automorphism signs and d''.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::arith::{QParam, Sign};
use crate::cases::{enumerate_X, exceptional_phi, Branch, CaseId, GroupCase, Label};
use crate::error::{CaseError, TransferError};

/// Exponent [(i+1)/2] of sgn(-1) for Res Spin(2i(i+1)+1).
pub(crate) fn res_b_exponent(i: u64) -> u64 {
    i.div_ceil(2)
}

/// Exponent [(j+2)/4] of sgn(-1) for ramified SU(T_j).
pub(crate) fn su_ram_exponent(j: u64) -> u64 {
    (j + 2) / 4
}

/// Exponent i/2 of sgn(-1) for Res Spin(2i²), i even.
pub(crate) fn d_res_exponent(i: u64) -> u64 {
    i / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignRule {
    /// The outer automorphism of ramified SU(T_j).
    ARamTheta,
    SpinUnram,
    /// Θ on ramified Spin(k²) or Spin(k(k+1)/2), parameter k.
    SpinRam,
    SpinCyclic4,
    /// ω on Res Spin(2i(i+1)+1).
    BRes,
}

impl SignRule {
    pub const ALL: [SignRule; 5] =
        [SignRule::ARamTheta, SignRule::SpinUnram, SignRule::SpinRam, SignRule::SpinCyclic4, SignRule::BRes];

    pub fn as_str(self) -> &'static str {
        match self {
            SignRule::ARamTheta => "A-ram-theta",
            SignRule::SpinUnram => "spin-unram",
            SignRule::SpinRam => "spin-ram",
            SignRule::SpinCyclic4 => "spin-cyclic4",
            SignRule::BRes => "B-res",
        }
    }
}

impl fmt::Display for SignRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SignRule {
    type Err = TransferError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SignRule::ALL
            .into_iter()
            .find(|r| r.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| TransferError::UnknownRule(s.to_string()))
    }
}

/// The eigenvalue of the outer automorphism, `param` being j, k or i.
pub fn automorphism_sign(rule: SignRule, param: u64, q: QParam) -> Sign {
    let s = q.sgn_minus_one();
    match rule {
        SignRule::ARamTheta => s.pow(su_ram_exponent(param)),
        SignRule::SpinUnram | SignRule::SpinCyclic4 => Sign::Plus,
        SignRule::SpinRam => s.pow(param / 2),
        SignRule::BRes => s.pow(res_b_exponent(param)),
    }
}

fn half(a: u64, b: u64) -> (u64, u64) {
    ((a + b) / 2, (a - b) / 2)
}

/// φ^- on T_k + T_h = 2n.
fn d_minus(k: u64, h: u64) -> (u64, u64) {
    if (k + h).is_multiple_of(2) {
        ((k - h) / 4, (k + h) / 2)
    } else {
        ((k + h + 1) / 4, (k - h - 1) / 2)
    }
}

fn classical(c: GroupCase, branch: Branch, k: u64, h: u64) -> (u64, u64) {
    use CaseId as C;
    match (c.id, branch) {
        (C::ARam | C::ARamInner, _) if k >= h => (k - h, k + h),
        (C::ARam | C::ARamInner, _) => (h - k - 1, h + k),
        (_, Branch::Nr) => ((k.abs_diff(h) - 1) / 2, (k + h - 1) / 2),
        (_, Branch::Ram) if (k + h) % 2 == 1 => ((k + h - 1) / 4, (k - h - 1) / 2),
        (_, Branch::Ram) => ((k - h - 2) / 4, (k + h) / 2),
        (C::CSplit | C::CInner, _) if (k + h).is_multiple_of(2) => half(k, h),
        (C::CSplit | C::CInner, _) => ((k - h - 1) / 2, (k + h).div_ceil(2)),
        (_, Branch::Plus) | (C::DQsUnramEven | C::DQsUnramEvenInner, _) => half(k, h),
        _ => d_minus(k, h),
    }
}

/// Image of `x` in Y. Character tags are carried over unchanged.
pub fn phi(c: GroupCase, q: QParam, x: &Label) -> Result<Label, TransferError> {
    let xs = enumerate_X(c, q)?;
    if !xs.iter().any(|e| &e.label == x) {
        return Err(CaseError::NotInX { case: c.id.as_str(), label: x.to_string() }.into());
    }
    if let Some(l) = exceptional_phi(c, x) {
        return Ok(l);
    }
    Ok(match x.ab() {
        Some((branch, k, h)) => {
            let (i, j) = classical(c, branch, k, h);
            let mut l = Label::pair(branch, i, j);
            l.xi = x.xi;
            l
        }
        None => x.clone(),
    })
}

/// (k, h) <= (k', h') iff k + h <= k' + h'.
pub fn order_le(x: &Label, y: &Label) -> bool {
    match (x.ab(), y.ab()) {
        (Some((_, k, h)), Some((_, k2, h2))) => k + h <= k2 + h2,
        _ => x <= y,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DppKind {
    #[serde(rename = "a")]
    A,
    /// bB, cB, bD, cD.
    #[serde(rename = "bB")]
    Shifted,
    /// bC, cC.
    #[serde(rename = "bC")]
    Symplectic,
}

impl FromStr for DppKind {
    type Err = TransferError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "a" => Ok(DppKind::A),
            "bB" | "cB" | "bD" | "cD" => Ok(DppKind::Shifted),
            "bC" | "cC" => Ok(DppKind::Symplectic),
            _ => Err(TransferError::UnknownKind(s.to_string())),
        }
    }
}

/// The denominator d'' of the depth of the separating element.
pub fn classical_dpp(kind: DppKind, k: u64, h: u64) -> Result<u64, TransferError> {
    if k == 0 && h == 0 {
        return Err(TransferError::ZeroPair);
    }
    let s = 2 * k + 2 * h;
    Ok(match kind {
        DppKind::A => s - 1,
        DppKind::Shifted => s - 2,
        DppKind::Symplectic => s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: u64) -> QParam {
        QParam::new(v).unwrap()
    }

    #[test]
    fn sign_examples() {
        assert_eq!(automorphism_sign(SignRule::ARamTheta, 3, q(13)), Sign::Plus);
        assert_eq!(automorphism_sign(SignRule::SpinRam, 2, q(7)), Sign::Minus);
        assert_eq!(automorphism_sign(SignRule::SpinUnram, 5, q(7)), Sign::Plus);
        assert!("nope".parse::<SignRule>().is_err());
        assert_eq!("spin-ram".parse::<SignRule>().unwrap(), SignRule::SpinRam);
    }

    #[test]
    fn dpp_examples() {
        assert_eq!(classical_dpp(DppKind::A, 2, 1), Ok(5));
        assert_eq!(classical_dpp("bB".parse().unwrap(), 4, 3), Ok(12));
        assert_eq!(classical_dpp("cC".parse().unwrap(), 3, 3), Ok(12));
        assert_eq!(classical_dpp(DppKind::A, 0, 0), Err(TransferError::ZeroPair));
        assert!("zz".parse::<DppKind>().is_err());
    }

    #[test]
    fn phi_examples() {
        let ram6 = GroupCase::new(CaseId::ARam, 6).unwrap();
        let y = phi(ram6, q(13), &Label::pair(Branch::Plain, 1, 2)).unwrap();
        assert_eq!(y, Label::pair(Branch::Plain, 0, 3));
        let b12 = GroupCase::new(CaseId::BSplit, 12).unwrap();
        assert_eq!(phi(b12, q(13), &Label::pair(Branch::Nr, 4, 3)).unwrap(), Label::pair(Branch::Nr, 0, 3));
        let x = Label::pair(Branch::Ram, 5, 4).with_xi(crate::cases::XiClass::Ram, 1);
        let y = Label::pair(Branch::Ram, 2, 0).with_xi(crate::cases::XiClass::Ram, 1);
        assert_eq!(phi(b12, q(13), &x).unwrap(), y);
        assert!(phi(b12, q(13), &Label::pair(Branch::Nr, 1, 1)).is_err());
    }

    #[test]
    fn order_examples() {
        let a = Label::pair(Branch::Plain, 1, 2);
        let b = Label::pair(Branch::Plain, 2, 0);
        assert!(!order_le(&a, &b));
        assert!(order_le(&b, &a));
        assert!(order_le(&a, &a));
    }
}
