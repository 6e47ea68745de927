//! Integer predicates used by every dimension formula.
//!
//! All indicator functions return `0` or `1` as a `u64` so they can be
//! multiplied and summed directly inside closed forms.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::ArithError;

/// Cardinality of the residue field.
///
/// Stored exactly. The tables assume the residual characteristic is large
/// compared to every rank in play; no primality check is made.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct QParam(u64);

impl QParam {
    pub fn new(q: u64) -> Result<Self, ArithError> {
        if q < 2 {
            return Err(ArithError::BadQ(q));
        }
        Ok(QParam(q))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// `δ_n(q-1)`.
    pub fn minus(self, n: u64) -> u64 {
        div_bit(n, self.0 as i128 - 1)
    }

    /// `δ_n(q+1)`.
    pub fn plus(self, n: u64) -> u64 {
        div_bit(n, self.0 as i128 + 1)
    }

    /// Residue field of the unramified quadratic extension.
    pub fn squared(self) -> Result<Self, ArithError> {
        self.0
            .checked_mul(self.0)
            .map(QParam)
            .ok_or(ArithError::Overflow(self.0))
    }

    /// Value of the quadratic residue symbol at `-1`.
    pub fn sgn_minus_one(self) -> Sign {
        if self.minus(4) == 1 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl TryFrom<u64> for QParam {
    type Error = ArithError;
    fn try_from(q: u64) -> Result<Self, Self::Error> {
        QParam::new(q)
    }
}

impl From<QParam> for u64 {
    fn from(q: QParam) -> u64 {
        q.0
    }
}

impl fmt::Display for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A sign `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(e: u64) -> Sign {
        if e.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn pow(self, e: u64) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => Sign::from_parity(e),
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// `1` if `n` divides `m`, else `0`.
pub fn delta_div(n: u64, m: i64) -> Result<u64, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroModulus);
    }
    Ok(div_bit(n, m as i128))
}

pub(crate) fn div_bit(n: u64, m: i128) -> u64 {
    debug_assert!(n > 0);
    u64::from(m.rem_euclid(n as i128) == 0)
}

pub fn euler_phi(n: u64) -> Result<u64, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroModulus);
    }
    let mut m = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    Ok(phi)
}

pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// `i(i+1)/2`.
pub fn tri(i: u64) -> u64 {
    i * (i + 1) / 2
}

/// `i(i+1)`.
pub fn pronic(i: u64) -> u64 {
    i * (i + 1)
}

/// The `i` with `i² = n`, if any.
pub fn square_root(n: u64) -> Option<u64> {
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

/// The `i` with `i(i+1)/2 = n`, if any.
pub fn triangle_root(n: u64) -> Option<u64> {
    // 8n+1 = (2i+1)²
    square_root(8 * n + 1).map(|s| (s - 1) / 2)
}

/// The `i` with `i(i+1) = n`, if any.
pub fn pronic_root(n: u64) -> Option<u64> {
    square_root(4 * n + 1).map(|s| (s - 1) / 2)
}

pub fn delta_square(n: u64) -> u64 {
    u64::from(square_root(n).is_some())
}

pub fn delta_triangle(n: u64) -> u64 {
    u64::from(triangle_root(n).is_some())
}

pub fn delta_2triangle(n: u64) -> u64 {
    u64::from(pronic_root(n).is_some())
}

/// `δ_d(n)` for a fixed positive modulus, as used with integer arguments.
pub fn divides(d: u64, n: u64) -> u64 {
    u64::from(n.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scan(n: u64, f: impl Fn(u64) -> u64) -> u64 {
        u64::from((0..=n).any(|i| f(i) == n))
    }

    #[test]
    fn known_values() {
        assert_eq!(delta_div(3, 12).unwrap(), 1);
        assert_eq!(delta_div(5, 12).unwrap(), 0);
        assert_eq!(delta_div(60, 60).unwrap(), 1);
        assert!(delta_div(0, 4).is_err());
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(6).unwrap(), 2);
        assert_eq!(euler_phi(9).unwrap(), 6);
        assert_eq!(delta_square(25), 1);
        assert_eq!(delta_square(24), 0);
        assert_eq!(delta_triangle(15), 1);
        assert_eq!(delta_2triangle(12), 1);
    }

    #[test]
    fn zero_is_admitted() {
        assert_eq!(delta_square(0), 1);
        assert_eq!(delta_triangle(0), 1);
        assert_eq!(delta_2triangle(0), 1);
    }

    #[test]
    fn roots_match_scan() {
        for n in 0..2000 {
            assert_eq!(delta_square(n), scan(n, |i| i * i), "square {n}");
            assert_eq!(delta_triangle(n), scan(n, tri), "tri {n}");
            assert_eq!(delta_2triangle(n), scan(n, pronic), "pronic {n}");
        }
    }

    #[test]
    fn squares_and_successors() {
        for n in 0..=10_000u64 {
            assert_eq!(delta_square(n * n), 1);
            if n > 0 {
                assert_eq!(delta_square(n * n + 1), 0);
            }
        }
    }

    #[test]
    fn phi_multiplicative() {
        for a in 1..=200u64 {
            for b in 1..=200u64 {
                if num_integer::gcd(a, b) == 1 {
                    assert_eq!(
                        euler_phi(a * b).unwrap(),
                        euler_phi(a).unwrap() * euler_phi(b).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn q_predicates() {
        let q = QParam::new(61).unwrap();
        assert_eq!(q.minus(60), 1);
        assert_eq!(q.plus(31), 1);
        assert_eq!(q.sgn_minus_one(), Sign::Plus);
        assert_eq!(QParam::new(7).unwrap().sgn_minus_one(), Sign::Minus);
        assert!(QParam::new(1).is_err());
        assert_eq!(q.squared().unwrap().get(), 3721);
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn delta_div_is_periodic(n in 1u64..500, m in -100_000i64..100_000) {
                let r = m.rem_euclid(n as i64);
                prop_assert_eq!(delta_div(n, m).unwrap(), delta_div(n, r).unwrap());
            }

            #[test]
            fn phi_counts_units(n in 1u64..3000) {
                let count = (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count() as u64;
                prop_assert_eq!(euler_phi(n).unwrap(), count);
            }
        }
    }
}
