//! Dimensions of the cuspidal spaces FC(g(F_q)) for finite groups.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::arith::{delta_square, delta_triangle, divides, euler_phi, QParam};
use crate::diagrams::{DynkinType, Series};
use crate::error::FiniteError;

/// How Frobenius acts on the Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FiniteForm {
    Split,
    QuasiSplit2,
    Triality3,
}

impl fmt::Display for FiniteForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiniteForm::Split => "split",
            FiniteForm::QuasiSplit2 => "quasi-split-2",
            FiniteForm::Triality3 => "triality-3",
        })
    }
}

impl FromStr for FiniteForm {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "split" => Ok(FiniteForm::Split),
            "quasi-split-2" | "qs2" => Ok(FiniteForm::QuasiSplit2),
            "triality-3" | "tri3" => Ok(FiniteForm::Triality3),
            other => Err(format!("unknown form {other}")),
        }
    }
}

/// The central subgroup divided out of the simply connected group.
///
/// For type D the names follow the usual generators: `z` generates the
/// kernel of Spin to SO, `z'` and `z''` are the other two involutions
/// when n is even. `Cyclic(d)` is the subgroup of order d of the centre of
/// SL(n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Isogeny {
    Sc,
    Ad,
    Z,
    ZPrime,
    ZDoublePrime,
    Cyclic(u32),
}

impl fmt::Display for Isogeny {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Isogeny::Sc => f.write_str("SC"),
            Isogeny::Ad => f.write_str("AD"),
            Isogeny::Z => f.write_str("z"),
            Isogeny::ZPrime => f.write_str("z'"),
            Isogeny::ZDoublePrime => f.write_str("z''"),
            Isogeny::Cyclic(d) => write!(f, "mu{d}"),
        }
    }
}

impl FromStr for Isogeny {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "SC" | "sc" => Ok(Isogeny::Sc),
            "AD" | "ad" | "full" => Ok(Isogeny::Ad),
            "z" => Ok(Isogeny::Z),
            "z'" | "z1" => Ok(Isogeny::ZPrime),
            "z''" | "z2" => Ok(Isogeny::ZDoublePrime),
            other => other
                .strip_prefix("mu")
                .and_then(|d| d.parse().ok())
                .map(Isogeny::Cyclic)
                .ok_or_else(|| format!("unknown isogeny {other}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteCase {
    #[serde(rename = "type")]
    pub ty: DynkinType,
    pub form: FiniteForm,
    pub isogeny: Isogeny,
    pub q: QParam,
}

impl FiniteCase {
    pub fn new(ty: DynkinType, form: FiniteForm, isogeny: Isogeny, q: QParam) -> Self {
        FiniteCase { ty, form, isogeny, q }
    }

    fn unsupported_form(&self) -> FiniteError {
        FiniteError::UnsupportedForm {
            ty: self.ty.to_string(),
            form: self.form.to_string(),
        }
    }

    fn unsupported_isogeny(&self) -> FiniteError {
        FiniteError::UnsupportedIsogeny {
            ty: self.ty.to_string(),
            form: self.form.to_string(),
            isogeny: self.isogeny.to_string(),
        }
    }
}

/// dim FC(g(F_q)) for a semisimple absolutely simple group over F_q.
pub fn dim_fc_fq(c: FiniteCase) -> Result<u64, FiniteError> {
    use FiniteForm::*;
    use Isogeny::*;
    let r = u64::from(c.ty.rank());
    let q = c.q;
    match (c.ty.series(), c.form) {
        (Series::A, Split) | (Series::A, QuasiSplit2) => {
            let n = r + 1;
            if c.form == QuasiSplit2 && n < 3 {
                return Err(c.unsupported_form());
            }
            let galois = if c.form == Split { q.minus(n) } else { q.plus(n) };
            match c.isogeny {
                Sc => Ok(euler_phi(n).expect("n > 0") * galois),
                Ad => Ok(0),
                Cyclic(d) if d > 1 && divides(u64::from(d), n) == 1 => Ok(0),
                Cyclic(1) => Ok(euler_phi(n).expect("n > 0") * galois),
                _ => Err(c.unsupported_isogeny()),
            }
        }
        (Series::B, Split) => match c.isogeny {
            Sc => Ok(delta_square(2 * r + 1) + delta_triangle(2 * r + 1)),
            Ad => Ok(delta_square(2 * r + 1)),
            _ => Err(c.unsupported_isogeny()),
        },
        (Series::C, Split) => match c.isogeny {
            Sc => Ok(delta_triangle(r)),
            Ad => Ok(delta_triangle(r) * divides(2, r)),
            _ => Err(c.unsupported_isogeny()),
        },
        (Series::D, Split) if r % 2 == 0 => {
            let sq = delta_square(2 * r);
            let tr = delta_triangle(2 * r);
            match c.isogeny {
                Sc => Ok(sq + 2 * tr),
                Z => Ok(sq),
                ZPrime | ZDoublePrime => Ok(sq * divides(4, r) + tr),
                Ad => Ok(sq * divides(4, r)),
                _ => Err(c.unsupported_isogeny()),
            }
        }
        (Series::D, QuasiSplit2) if r % 2 == 0 => {
            let sq = delta_square(2 * r);
            match c.isogeny {
                Sc | Z => Ok(sq),
                Ad => Ok(sq * divides(4, r)),
                _ => Err(c.unsupported_isogeny()),
            }
        }
        (Series::D, Split) | (Series::D, QuasiSplit2) => {
            let galois = if c.form == Split { q.minus(4) } else { q.plus(4) };
            match c.isogeny {
                Sc => Ok(2 * delta_triangle(2 * r) * galois),
                Z | Ad => Ok(0),
                _ => Err(c.unsupported_isogeny()),
            }
        }
        (Series::D, Triality3) if r == 4 => match c.isogeny {
            Sc | Ad => Ok(0),
            _ => Err(c.unsupported_isogeny()),
        },
        (Series::E, Split) | (Series::E, QuasiSplit2) if r == 6 => match c.isogeny {
            Sc if c.form == Split => Ok(2 * q.minus(3)),
            Sc => Ok(2 * q.plus(3)),
            Ad => Ok(0),
            _ => Err(c.unsupported_isogeny()),
        },
        (Series::E, Split) if r == 7 => match c.isogeny {
            Sc => Ok(1),
            Ad => Ok(0),
            _ => Err(c.unsupported_isogeny()),
        },
        (Series::E, Split) | (Series::F, Split) | (Series::G, Split) => match c.isogeny {
            Sc | Ad => Ok(1),
            _ => Err(c.unsupported_isogeny()),
        },
        _ => Err(c.unsupported_form()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn case(t: &str, form: FiniteForm, iso: Isogeny, q: u64) -> FiniteCase {
        FiniteCase::new(t.parse().unwrap(), form, iso, QParam::new(q).unwrap())
    }

    fn dim(t: &str, form: FiniteForm, iso: Isogeny, q: u64) -> u64 {
        dim_fc_fq(case(t, form, iso, q)).unwrap()
    }

    use FiniteForm::*;
    use Isogeny::*;

    #[test]
    fn spot_values() {
        assert_eq!(dim("A5", Split, Sc, 7), 2);
        assert_eq!(dim("A5", Split, Ad, 7), 0);
        assert_eq!(dim("A5", Split, Cyclic(2), 7), 0);
        assert_eq!(dim("B12", Split, Sc, 5), 1);
        assert_eq!(dim("C10", Split, Ad, 5), 1);
        assert_eq!(dim("D4", Triality3, Sc, 5), 0);
        assert_eq!(dim("E6", Split, Sc, 7), 2);
        assert_eq!(dim("E6", Split, Sc, 5), 0);
        assert_eq!(dim("E6", QuasiSplit2, Sc, 5), 2);
        assert_eq!(dim("E7", Split, Sc, 5), 1);
        assert_eq!(dim("E7", Split, Ad, 5), 0);
        assert_eq!(dim("G2", Split, Sc, 5), 1);
    }

    #[test]
    fn d_quotients() {
        // 2n = 8 is not a square; 2n = 36 is both a square and triangular
        assert_eq!(dim("D18", Split, Sc, 5), 3);
        assert_eq!(dim("D18", Split, Z, 5), 1);
        assert_eq!(dim("D18", Split, ZPrime, 5), 1);
        assert_eq!(dim("D18", Split, Ad, 5), 0);
        assert_eq!(dim("D8", Split, Ad, 5), 1);
        assert_eq!(dim("D8", Split, ZDoublePrime, 5), 1);
        assert!(dim_fc_fq(case("D8", QuasiSplit2, ZPrime, 5)).is_err());
    }

    #[test]
    fn d_odd_depends_on_q() {
        // 2n = 10 = T_4
        assert_eq!(dim("D5", Split, Sc, 5), 2);
        assert_eq!(dim("D5", Split, Sc, 7), 0);
        assert_eq!(dim("D5", QuasiSplit2, Sc, 7), 2);
        assert_eq!(dim("D5", Split, Z, 5), 0);
    }

    #[test]
    fn rejects_bad_forms() {
        assert!(dim_fc_fq(case("B3", QuasiSplit2, Sc, 5)).is_err());
        assert!(dim_fc_fq(case("E6", Triality3, Sc, 5)).is_err());
        assert!(dim_fc_fq(case("D5", Triality3, Sc, 5)).is_err());
        assert!(dim_fc_fq(case("A1", QuasiSplit2, Sc, 5)).is_err());
        assert!(dim_fc_fq(case("B3", Split, Z, 5)).is_err());
    }

    #[test]
    fn quotients_never_exceed_sc() {
        for t in DynkinType::all_up_to(12) {
            for form in [Split, QuasiSplit2, Triality3] {
                for q in [5u64, 7, 11, 13] {
                    let Ok(sc) = dim_fc_fq(FiniteCase::new(t, form, Sc, QParam::new(q).unwrap())) else {
                        continue;
                    };
                    for iso in [Ad, Z, ZPrime, ZDoublePrime, Cyclic(2), Cyclic(3)] {
                        if let Ok(v) = dim_fc_fq(FiniteCase::new(t, form, iso, QParam::new(q).unwrap())) {
                            assert!(v <= sc, "{t} {form} {iso} q={q}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn periodic_in_q() {
        for t in DynkinType::all_up_to(12) {
            for form in [Split, QuasiSplit2] {
                for q in 2u64..40 {
                    let a = dim_fc_fq(FiniteCase::new(t, form, Sc, QParam::new(q).unwrap()));
                    let b =
                        dim_fc_fq(FiniteCase::new(t, form, Sc, QParam::new(q + 360360).unwrap()));
                    assert_eq!(a, b, "{t} {form} q={q}");
                }
            }
        }
    }
}
