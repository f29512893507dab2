//! Real simple Lie algebras and the free subgroup rank of connected simple
//! Lie groups.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::{Family, RootSystemType};
use crate::sork::{sork_formula, sork_of_type, OrthCertificate};

/// Noncompact exceptional real forms by character index, plus the compact
/// ones (`E6(-78)`, `E7(-133)`, `E8(-248)`, `F4(-52)`, `G2(-14)`).
const EXCEPTIONAL_INDICES: [(&str, &[i32]); 5] = [
    ("E6", &[6, 2, -14, -26, -78]),
    ("E7", &[7, -5, -25, -133]),
    ("E8", &[8, -24, -248]),
    ("F4", &[4, -20, -52]),
    ("G2", &[2, -14]),
];

/// A real simple Lie algebra named by the standard classification.
///
/// `sl(n,R)` and `sp(n,R)` are the split forms of `A_{n-1}` and `C_n`, and
/// `su(n)` is the compact form of `A_{n-1}`; all three are stored as
/// [`RealForm::Split`] or [`RealForm::Compact`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RealForm {
    /// A complex simple Lie algebra viewed as a real one.
    Complex(RootSystemType),
    Compact(RootSystemType),
    Split(RootSystemType),
    Su {
        p: usize,
        q: usize,
    },
    /// `sl(n,H) = su*(2n)`.
    SlH(usize),
    So {
        p: usize,
        q: usize,
    },
    /// `so*(2n)`, storing `n`.
    SoStar(usize),
    Sp {
        p: usize,
        q: usize,
    },
    Exceptional {
        ty: RootSystemType,
        index: i32,
    },
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidRealForm(msg.into()))
}

impl RealForm {
    /// Checks that the parameters describe a simple algebra.
    pub fn validate(self) -> Result<RealForm> {
        match self {
            RealForm::Complex(t) | RealForm::Compact(t) | RealForm::Split(t) => {
                if !t.is_irreducible() {
                    return invalid(format!("{t} is not simple"));
                }
            }
            RealForm::Su { p, q } if p + q < 2 => return invalid("su(p,q) needs p + q >= 2"),
            RealForm::SlH(n) if n < 1 => return invalid("sl(n,H) needs n >= 1"),
            RealForm::So { p, q } => {
                if p + q < 3 {
                    return invalid("so(p,q) needs p + q >= 3");
                }
                if p + q == 4 && p != 1 && p != 3 {
                    return invalid(format!("so({p},{q}) is not simple"));
                }
            }
            RealForm::SoStar(n) if n < 3 => {
                return invalid(format!("so*({}) is not simple", 2 * n))
            }
            RealForm::Sp { p, q } if p + q < 1 => return invalid("sp(p,q) needs p + q >= 1"),
            RealForm::Exceptional { ty, index } => {
                let name = ty.to_string();
                let known = EXCEPTIONAL_INDICES
                    .iter()
                    .any(|(n, idx)| *n == name && idx.contains(&index));
                if !known {
                    return invalid(format!("no real form {name}({index})"));
                }
            }
            _ => {}
        }
        Ok(self)
    }

    /// `so(3,1)`, isomorphic to `sl(2,C)`, carries a complex structure.
    pub fn has_complex_structure(&self) -> bool {
        matches!(
            self,
            RealForm::Complex(_) | RealForm::So { p: 3, q: 1 } | RealForm::So { p: 1, q: 3 }
        )
    }
}

impl fmt::Display for RealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RealForm::Complex(t) => write!(f, "complex({t})"),
            RealForm::Compact(t) if t.family() == Family::A => write!(f, "su({})", t.rank() + 1),
            RealForm::Compact(t) => write!(f, "compact({t})"),
            RealForm::Split(t) if t.family() == Family::A => write!(f, "sl({},R)", t.rank() + 1),
            RealForm::Split(t) if t.family() == Family::C => write!(f, "sp({},R)", t.rank()),
            RealForm::Split(t) => write!(f, "split({t})"),
            RealForm::Su { p, q } => write!(f, "su({p},{q})"),
            RealForm::SlH(n) => write!(f, "sl({n},H)"),
            RealForm::So { p, q } => write!(f, "so({p},{q})"),
            RealForm::SoStar(n) => write!(f, "so*({})", 2 * n),
            RealForm::Sp { p, q } => write!(f, "sp({p},{q})"),
            RealForm::Exceptional { ty, index } => write!(f, "{ty}({index})"),
        }
    }
}

impl FromStr for RealForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<RealForm> {
        match crate::groups::parse_group_expr(s)? {
            crate::groups::GroupExpr::SimpleLie(d) => Ok(d),
            other => invalid(format!("{other} is not a simple Lie algebra")),
        }
    }
}

impl Serialize for RealForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn ty(family: Family, rank: usize) -> Result<RootSystemType> {
    RootSystemType::new(family, rank).map_err(|e| Error::InvalidRealForm(e.to_string()))
}

/// Root system of the complexification; for algebras with a complex
/// structure, the root system of the underlying complex algebra.
pub fn complexification_type(d: RealForm) -> Result<RootSystemType> {
    let d = d.validate()?;
    match d {
        RealForm::Complex(t) | RealForm::Compact(t) | RealForm::Split(t) => Ok(t),
        RealForm::Su { p, q } => ty(Family::A, p + q - 1),
        RealForm::SlH(n) => ty(Family::A, 2 * n - 1),
        RealForm::So { p: 3, q: 1 } | RealForm::So { p: 1, q: 3 } => ty(Family::A, 1),
        RealForm::So { p, q } if p + q == 3 => ty(Family::A, 1),
        RealForm::So { p, q } if (p + q) % 2 == 1 => ty(Family::B, (p + q - 1) / 2),
        RealForm::So { p, q } => ty(Family::D, (p + q) / 2),
        RealForm::SoStar(n) => ty(Family::D, n),
        RealForm::Sp { p, q } => ty(Family::C, p + q),
        RealForm::Exceptional { ty, .. } => Ok(ty),
    }
}

/// `so(p,q)` with `p`, `q` odd and `p + q = 0 mod 4`, excluding the
/// complex `so(3,1)`.
pub fn is_sopq_exception(d: RealForm) -> Result<bool> {
    let d = d.validate()?;
    Ok(match d {
        RealForm::So { p, q } => {
            p % 2 == 1 && q % 2 == 1 && (p + q) % 4 == 0 && !d.has_complex_structure()
        }
        _ => false,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NuCase {
    ComplexStructure,
    RealForm,
    SopqException,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NuResult {
    pub nu: usize,
    pub case: NuCase,
    pub sork_of_complexification: usize,
    /// Strongly orthogonal roots of the complexified root system, `nu` of
    /// them.
    pub certificate: Option<OrthCertificate>,
}

pub fn nu_simple(d: RealForm) -> Result<NuResult> {
    let mut result = nu_simple_value(d)?;
    let (_, mut cert) = sork_of_type(complexification_type(d)?);
    cert.roots.truncate(result.nu);
    result.certificate = Some(cert);
    Ok(result)
}

/// [`nu_simple`] without running the certificate search.
pub fn nu_simple_value(d: RealForm) -> Result<NuResult> {
    let t = complexification_type(d)?;
    let sork = sork_formula(t);
    let (nu, case) = if d.has_complex_structure() {
        (sork, NuCase::ComplexStructure)
    } else if is_sopq_exception(d)? {
        (sork - 1, NuCase::SopqException)
    } else {
        (sork, NuCase::RealForm)
    };
    Ok(NuResult {
        nu,
        case,
        sork_of_complexification: sork,
        certificate: None,
    })
}

/// Bound on the parameters of [`catalog`]: `p + q <= 8`, `n <= 8`, and
/// rank `<= 8` for the families named by a root system type.
pub const CATALOG_BOUND: usize = 8;

/// One name per isomorphism class of real simple Lie algebra within
/// [`CATALOG_BOUND`]. Low-rank coincidences are resolved by parameter
/// restrictions (`su(1,1)`, `sp(1,1)`, `sp(2,R)`, `so(p,q)` with
/// `p + q <= 4` or `p + q = 6` are covered by other names).
pub fn catalog() -> Vec<RealForm> {
    let bound = CATALOG_BOUND;
    let mut out = Vec::new();
    let types: Vec<RootSystemType> = RootSystemType::all_up_to(bound)
        .into_iter()
        .filter(|t| match t.family() {
            Family::B => t.rank() >= 2,
            Family::C => t.rank() >= 3,
            Family::D => t.rank() >= 4,
            _ => true,
        })
        .collect();
    out.extend(types.iter().map(|&t| RealForm::Complex(t)));
    out.extend(types.iter().map(|&t| RealForm::Compact(t)));
    for n in 2..=bound {
        out.push(RealForm::Split(
            RootSystemType::new(Family::A, n - 1).expect("rank >= 1"),
        ));
    }
    for n in 3..=bound {
        out.push(RealForm::Split(
            RootSystemType::new(Family::C, n).expect("rank >= 3"),
        ));
    }
    for total in 3..=bound {
        for q in 1..=total / 2 {
            out.push(RealForm::Su { p: total - q, q });
        }
    }
    for n in 2..=bound {
        out.push(RealForm::SlH(n));
    }
    for total in (5..=bound).filter(|&s| s != 6) {
        for q in 1..=total / 2 {
            out.push(RealForm::So { p: total - q, q });
        }
    }
    for n in 4..=bound {
        out.push(RealForm::SoStar(n));
    }
    for total in 3..=bound {
        for q in 1..=total / 2 {
            out.push(RealForm::Sp { p: total - q, q });
        }
    }
    for (name, indices) in EXCEPTIONAL_INDICES {
        let ty: RootSystemType = name.parse().expect("exceptional type");
        // the compact form is Compact(ty); its index is the last entry
        for &index in &indices[..indices.len() - 1] {
            out.push(RealForm::Exceptional { ty, index });
        }
    }
    out
}

/// Catalog entries with free subgroup rank one.
pub fn nu_one_catalog() -> Vec<RealForm> {
    catalog()
        .into_iter()
        .filter(|&d| nu_simple_value(d).map(|r| r.nu == 1).unwrap_or(false))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RealForm {
        s.parse().unwrap()
    }

    fn t(s: &str) -> RootSystemType {
        s.parse().unwrap()
    }

    #[test]
    fn dictionary() {
        assert_eq!(complexification_type(rf("su(2,1)")).unwrap(), t("A2"));
        assert_eq!(complexification_type(rf("so(3,5)")).unwrap(), t("D4"));
        assert_eq!(complexification_type(rf("sl(2,H)")).unwrap(), t("A3"));
        assert_eq!(complexification_type(rf("so(4,1)")).unwrap(), t("B2"));
        assert_eq!(complexification_type(rf("so(2,1)")).unwrap(), t("A1"));
        assert_eq!(complexification_type(rf("so*(8)")).unwrap(), t("D4"));
        assert_eq!(complexification_type(rf("sp(2,1)")).unwrap(), t("C3"));
        assert_eq!(complexification_type(rf("sp(1,R)")).unwrap(), t("A1"));
        assert_eq!(complexification_type(rf("E6(-26)")).unwrap(), t("E6"));
        assert_eq!(complexification_type(rf("so(3,1)")).unwrap(), t("A1"));
    }

    #[test]
    fn non_simple_rejected() {
        for bad in [
            "so(2,2)",
            "so(4)",
            "so(4,0)",
            "so(1,1)",
            "so*(4)",
            "complex(D2)",
        ] {
            assert!(
                matches!(bad.parse::<RealForm>(), Err(Error::InvalidRealForm(_))),
                "{bad}"
            );
        }
        assert!("E6(-25)".parse::<RealForm>().is_err());
    }

    #[test]
    fn exception_predicate() {
        assert!(is_sopq_exception(rf("so(3,5)")).unwrap());
        assert!(is_sopq_exception(rf("so(7,1)")).unwrap());
        assert!(!is_sopq_exception(rf("so(5,1)")).unwrap());
        assert!(!is_sopq_exception(rf("so(3,1)")).unwrap());
        assert!(!is_sopq_exception(rf("so(4,4)")).unwrap());
    }

    #[test]
    fn three_cases() {
        let sl2c = nu_simple(rf("complex(A1)")).unwrap();
        assert_eq!((sl2c.nu, sl2c.case), (1, NuCase::ComplexStructure));
        let so31 = nu_simple(rf("so(3,1)")).unwrap();
        assert_eq!((so31.nu, so31.case), (1, NuCase::ComplexStructure));
        let so35 = nu_simple(rf("so(3,5)")).unwrap();
        assert_eq!((so35.nu, so35.case), (3, NuCase::SopqException));
        assert_eq!(so35.sork_of_complexification, 4);
        assert_eq!(so35.certificate.as_ref().unwrap().len(), 3);
        let e6 = nu_simple(rf("E6(-26)")).unwrap();
        assert_eq!((e6.nu, e6.case), (4, NuCase::RealForm));
    }

    #[test]
    fn hyperbolic_isometries() {
        for n in 2..=12 {
            let d = RealForm::So { p: n, q: 1 };
            assert_eq!(nu_simple_value(d).unwrap().nu, n / 2, "so({n},1)");
        }
    }

    #[test]
    fn display_round_trips() {
        for d in catalog() {
            assert_eq!(rf(&d.to_string()), d);
        }
    }

    #[test]
    fn catalog_is_valid() {
        for d in catalog() {
            assert!(d.validate().is_ok(), "{d}");
        }
    }
}
