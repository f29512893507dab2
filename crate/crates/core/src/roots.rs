//! Irreducible root systems in exact coordinates.
//!
//! Every coordinate is stored doubled, so the half-integer vectors of the
//! E family and `F4` are integer vectors here. Inner products are computed
//! on doubled coordinates and divided by four only when a true value is
//! requested.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sork::{verify_certificate_in, OrthCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

/// Classification label of an irreducible root system, e.g. `E8` or `B3`.
///
/// `C1` is normalized to `A1` on construction. `D2` and `D3` are accepted
/// and flagged through [`RootSystemType::low_rank_isomorphism`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct RootSystemType {
    family: Family,
    rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let bad = |bound: &str| {
            Err(Error::InvalidType(format!(
                "{}{}: rank must satisfy {}",
                family.letter(),
                rank,
                bound
            )))
        };
        match family {
            Family::A if rank < 1 => return bad("r >= 1"),
            Family::B if rank < 2 => return bad("r >= 2"),
            Family::C if rank < 1 => return bad("r >= 2"),
            Family::C if rank == 1 => {
                return Ok(RootSystemType {
                    family: Family::A,
                    rank: 1,
                })
            }
            Family::D if rank < 2 => return bad("r >= 2"),
            Family::E if !(6..=8).contains(&rank) => return bad("r in {6, 7, 8}"),
            Family::F if rank != 4 => return bad("r = 4"),
            Family::G if rank != 2 => return bad("r = 2"),
            _ => {}
        }
        Ok(RootSystemType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `D2` is reducible (`A1 x A1`) and `D3` coincides with `A3`.
    pub fn low_rank_isomorphism(&self) -> Option<&'static str> {
        match (self.family, self.rank) {
            (Family::D, 2) => Some("A1 x A1 (reducible)"),
            (Family::D, 3) => Some("A3"),
            _ => None,
        }
    }

    pub fn is_irreducible(&self) -> bool {
        !(self.family == Family::D && self.rank == 2)
    }

    /// Number of roots, by the classical formulas.
    pub fn root_count(&self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 1),
            Family::B | Family::C => 2 * r * r,
            Family::D => 2 * r * (r - 1),
            Family::E => match r {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    /// Every constructible type with classical rank at most `rank_cap`,
    /// plus the five exceptional types. `D2` and `D3` are included.
    pub fn all_up_to(rank_cap: usize) -> Vec<RootSystemType> {
        let mut out = Vec::new();
        for r in 1..=rank_cap {
            out.push(RootSystemType {
                family: Family::A,
                rank: r,
            });
        }
        for r in 2..=rank_cap {
            out.push(RootSystemType {
                family: Family::B,
                rank: r,
            });
        }
        for r in 2..=rank_cap {
            out.push(RootSystemType {
                family: Family::C,
                rank: r,
            });
        }
        for r in 2..=rank_cap {
            out.push(RootSystemType {
                family: Family::D,
                rank: r,
            });
        }
        for r in 6..=8 {
            out.push(RootSystemType {
                family: Family::E,
                rank: r,
            });
        }
        out.push(RootSystemType {
            family: Family::F,
            rank: 4,
        });
        out.push(RootSystemType {
            family: Family::G,
            rank: 2,
        });
        out
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for RootSystemType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::InvalidType(format!("unknown family in {s:?}")))?;
        let digits = chars.as_str().trim_start_matches('_');
        let rank = digits
            .parse::<usize>()
            .map_err(|_| Error::InvalidType(format!("bad rank in {s:?}")))?;
        RootSystemType::new(family, rank)
    }
}

impl From<RootSystemType> for String {
    fn from(t: RootSystemType) -> String {
        t.to_string()
    }
}

impl TryFrom<String> for RootSystemType {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// A vector of the ambient space, stored as doubled coordinates.
///
/// The derived ordering is lexicographic on the doubled coordinates and is
/// the tie-break order used for canonical certificates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn from_doubled(doubled: Vec<i32>) -> Root {
        Root(doubled)
    }

    /// Builds a vector from integer true coordinates.
    pub fn from_coords(coords: &[i32]) -> Root {
        Root(coords.iter().map(|c| 2 * c).collect())
    }

    pub fn doubled(&self) -> &[i32] {
        &self.0
    }

    pub fn ambient_dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Four times the true inner product. Panics on a dimension mismatch.
    pub(crate) fn dot4(&self, other: &Root) -> i64 {
        assert_eq!(self.0.len(), other.0.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| i64::from(a) * i64::from(b))
            .sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if c % 2 == 0 {
                write!(f, "{}", c / 2)?;
            } else {
                write!(f, "{c}/2")?;
            }
        }
        write!(f, ")")
    }
}

impl Neg for &Root {
    type Output = Root;

    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl Add for &Root {
    type Output = Root;

    fn add(self, rhs: &Root) -> Root {
        assert_eq!(self.0.len(), rhs.0.len());
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;

    fn sub(self, rhs: &Root) -> Root {
        assert_eq!(self.0.len(), rhs.0.len());
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Exact Euclidean pairing on true coordinates.
pub fn inner_product(a: &Root, b: &Root) -> Result<Rational64> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::Dimension {
            left: a.ambient_dim(),
            right: b.ambient_dim(),
        });
    }
    Ok(Rational64::new(a.dot4(b), 4))
}

/// The full set of roots of an irreducible type, with simple roots in
/// Bourbaki order.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: RootSystemType,
    ambient_dim: usize,
    roots: Vec<Root>,
    simple_roots: Vec<Root>,
    positive: Vec<Root>,
    index: HashSet<Root>,
}

pub fn build_root_system(t: RootSystemType) -> RootSystem {
    RootSystem::new(t)
}

impl RootSystem {
    pub fn new(ty: RootSystemType) -> RootSystem {
        let (ambient_dim, mut roots, simple_roots) = construct(ty);
        roots.sort();
        roots.dedup();
        let index: HashSet<Root> = roots.iter().cloned().collect();
        let mut sys = RootSystem {
            ty,
            ambient_dim,
            roots,
            simple_roots,
            positive: Vec::new(),
            index,
        };
        let basis = SimpleBasis::new(&sys.simple_roots);
        sys.positive = sys
            .roots
            .iter()
            .filter(|r| {
                basis
                    .coordinates(r)
                    .map(|c| c.iter().all(|&x| x >= 0))
                    .unwrap_or(false)
            })
            .cloned()
            .collect();
        sys
    }

    pub fn from_name(name: &str) -> Result<RootSystem> {
        Ok(RootSystem::new(name.parse()?))
    }

    pub fn root_type(&self) -> RootSystemType {
        self.ty
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// All roots, sorted lexicographically by doubled coordinates.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple_roots
    }

    /// Roots with nonnegative simple-root coordinates, sorted.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, v: &Root) -> bool {
        v.ambient_dim() == self.ambient_dim && self.index.contains(v)
    }

    fn check_member(&self, v: &Root) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::Membership {
                root: v.to_string(),
                system: self.ty.to_string(),
            })
        }
    }

    /// Strong orthogonality without the membership check.
    pub(crate) fn strongly_orthogonal_unchecked(&self, a: &Root, b: &Root) -> bool {
        a.dot4(b) == 0 && !self.index.contains(&(a + b)) && !self.index.contains(&(a - b))
    }

    pub fn is_strongly_orthogonal(&self, a: &Root, b: &Root) -> Result<bool> {
        self.check_member(a)?;
        self.check_member(b)?;
        Ok(self.strongly_orthogonal_unchecked(a, b))
    }

    pub fn is_closed_subsystem(&self, sigma: &[Root]) -> Result<bool> {
        for r in sigma {
            self.check_member(r)?;
        }
        let members: HashSet<&Root> = sigma.iter().collect();
        for a in sigma {
            for b in sigma {
                let sum = a + b;
                if self.index.contains(&sum) && !members.contains(&sum) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Coefficients of `v` in the basis of simple roots, if `v` is an
    /// integer combination of them.
    pub fn simple_coordinates(&self, v: &Root) -> Option<Vec<i64>> {
        SimpleBasis::new(&self.simple_roots).coordinates(v)
    }

    /// `a[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_roots
            .iter()
            .map(|a| {
                self.simple_roots
                    .iter()
                    .map(|b| 2 * a.dot4(b) / b.dot4(b))
                    .collect()
            })
            .collect()
    }

    pub fn dump(&self) -> RootsDump {
        RootsDump {
            ty: self.ty,
            ambient_dim: self.ambient_dim,
            doubled_coords: self.roots.iter().map(|r| r.0.clone()).collect(),
        }
    }
}

pub fn is_strongly_orthogonal(a: &Root, b: &Root, phi: &RootSystem) -> Result<bool> {
    phi.is_strongly_orthogonal(a, b)
}

pub fn is_closed_subsystem(sigma: &[Root], phi: &RootSystem) -> Result<bool> {
    phi.is_closed_subsystem(sigma)
}

/// The certificate roots together with their negatives, sorted. This is a
/// closed subsystem of type `(A1)^n`.
pub fn a1n_subsystem(cert: &OrthCertificate, phi: &RootSystem) -> Result<Vec<Root>> {
    verify_certificate_in(cert, phi).map_err(Error::Certificate)?;
    let mut out: Vec<Root> = cert.roots.iter().flat_map(|r| [r.clone(), -r]).collect();
    out.sort();
    Ok(out)
}

/// JSON form used by `dump-roots`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsDump {
    #[serde(rename = "type")]
    pub ty: RootSystemType,
    pub ambient_dim: usize,
    pub doubled_coords: Vec<Vec<i32>>,
}

struct SimpleBasis<'a> {
    simple: &'a [Root],
    gram_inv: Vec<Vec<Rational64>>,
}

impl<'a> SimpleBasis<'a> {
    fn new(simple: &'a [Root]) -> Self {
        let n = simple.len();
        let gram: Vec<Vec<Rational64>> = simple
            .iter()
            .map(|a| simple.iter().map(|b| Rational64::from(a.dot4(b))).collect())
            .collect();
        SimpleBasis {
            simple,
            gram_inv: invert(gram, n),
        }
    }

    fn coordinates(&self, v: &Root) -> Option<Vec<i64>> {
        if self.simple.is_empty() || v.ambient_dim() != self.simple[0].ambient_dim() {
            return None;
        }
        let rhs: Vec<Rational64> = self
            .simple
            .iter()
            .map(|s| Rational64::from(s.dot4(v)))
            .collect();
        let mut coeffs = Vec::with_capacity(rhs.len());
        for row in &self.gram_inv {
            let c: Rational64 = row.iter().zip(&rhs).map(|(a, b)| a * b).sum();
            if !c.is_integer() {
                return None;
            }
            coeffs.push(c.to_integer());
        }
        // projection onto the span must reproduce v
        let mut back = vec![0i64; v.ambient_dim()];
        for (c, s) in coeffs.iter().zip(self.simple) {
            for (acc, &x) in back.iter_mut().zip(s.doubled()) {
                *acc += c * i64::from(x);
            }
        }
        let same = back
            .iter()
            .zip(v.doubled())
            .all(|(&a, &b)| a == i64::from(b));
        same.then_some(coeffs)
    }
}

fn invert(mut m: Vec<Vec<Rational64>>, n: usize) -> Vec<Vec<Rational64>> {
    let mut inv: Vec<Vec<Rational64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational64::one()
                    } else {
                        Rational64::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("simple roots are linearly independent");
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col];
        for j in 0..n {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for j in 0..n {
                    let (a, b) = (m[col][j], inv[col][j]);
                    m[r][j] -= f * a;
                    inv[r][j] -= f * b;
                }
            }
        }
    }
    inv
}

fn unit(dim: usize, i: usize, scale: i32) -> Vec<i32> {
    let mut v = vec![0; dim];
    v[i] = scale;
    v
}

/// `sign_i e_i + sign_j e_j` in doubled coordinates.
fn pair(dim: usize, i: usize, si: i32, j: usize, sj: i32) -> Root {
    let mut v = vec![0; dim];
    v[i] = 2 * si;
    v[j] = 2 * sj;
    Root(v)
}

fn long_pairs(dim: usize, n: usize, both_signs: bool) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for si in [1, -1] {
                for sj in [1, -1] {
                    if both_signs || si != sj {
                        out.push(pair(dim, i, si, j, sj));
                    }
                }
            }
        }
    }
    out
}

fn chain_simple(dim: usize, n: usize) -> Vec<Root> {
    (0..n).map(|i| pair(dim, i, 1, i + 1, -1)).collect()
}

/// E8 in the even coordinate system: `+-e_i +- e_j` and `1/2 (+-1, ..., +-1)`
/// with an even number of minus signs.
fn e8_roots() -> Vec<Root> {
    let mut roots = long_pairs(8, 8, true);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            roots.push(Root(
                (0..8)
                    .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                    .collect(),
            ));
        }
    }
    roots
}

fn e8_simple() -> Vec<Root> {
    let mut simple = vec![
        Root(vec![1, -1, -1, -1, -1, -1, -1, 1]),
        pair(8, 0, 1, 1, 1),
        pair(8, 1, 1, 0, -1),
    ];
    for i in 2..7 {
        simple.push(pair(8, i, 1, i - 1, -1));
    }
    simple
}

fn construct(ty: RootSystemType) -> (usize, Vec<Root>, Vec<Root>) {
    let r = ty.rank();
    match ty.family() {
        Family::A => {
            let dim = r + 1;
            let roots = long_pairs(dim, dim, false);
            (dim, roots, chain_simple(dim, r))
        }
        Family::B => {
            let mut roots = long_pairs(r, r, true);
            for i in 0..r {
                roots.push(Root(unit(r, i, 2)));
                roots.push(Root(unit(r, i, -2)));
            }
            let mut simple = chain_simple(r, r - 1);
            simple.push(Root(unit(r, r - 1, 2)));
            (r, roots, simple)
        }
        Family::C => {
            let mut roots = long_pairs(r, r, true);
            for i in 0..r {
                roots.push(Root(unit(r, i, 4)));
                roots.push(Root(unit(r, i, -4)));
            }
            let mut simple = chain_simple(r, r - 1);
            simple.push(Root(unit(r, r - 1, 4)));
            (r, roots, simple)
        }
        Family::D => {
            let roots = long_pairs(r, r, true);
            let mut simple = chain_simple(r, r - 1);
            simple.push(pair(r, r - 2, 1, r - 1, 1));
            (r, roots, simple)
        }
        Family::E => {
            // E7: orthogonal to e7 + e8; E6: additionally orthogonal to e6 + e8
            let roots = e8_roots()
                .into_iter()
                .filter(|v| r == 8 || v.0[6] + v.0[7] == 0)
                .filter(|v| r != 6 || v.0[5] + v.0[7] == 0)
                .collect();
            let simple = e8_simple().into_iter().take(r).collect();
            (8, roots, simple)
        }
        Family::F => {
            let mut roots = long_pairs(4, 4, true);
            for i in 0..4 {
                roots.push(Root(unit(4, i, 2)));
                roots.push(Root(unit(4, i, -2)));
            }
            for mask in 0u32..16 {
                roots.push(Root(
                    (0..4)
                        .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                        .collect(),
                ));
            }
            let simple = vec![
                pair(4, 1, 1, 2, -1),
                pair(4, 2, 1, 3, -1),
                Root(unit(4, 3, 2)),
                Root(vec![1, -1, -1, -1]),
            ];
            (4, roots, simple)
        }
        Family::G => {
            let mut roots = long_pairs(3, 3, false);
            for i in 0..3 {
                let long: Vec<i32> = (0..3).map(|k| if k == i { 4 } else { -2 }).collect();
                roots.push(Root(long.iter().map(|c| -c).collect()));
                roots.push(Root(long));
            }
            let simple = vec![pair(3, 0, 1, 1, -1), Root(vec![-4, 2, 2])];
            (3, roots, simple)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> RootSystemType {
        s.parse().unwrap()
    }

    #[test]
    fn rank_bounds() {
        assert!(RootSystemType::new(Family::A, 0).is_err());
        assert!(RootSystemType::new(Family::B, 1).is_err());
        assert!(RootSystemType::new(Family::D, 1).is_err());
        assert!(RootSystemType::new(Family::E, 5).is_err());
        assert!(RootSystemType::new(Family::E, 9).is_err());
        assert!(RootSystemType::new(Family::F, 3).is_err());
        assert!(RootSystemType::new(Family::G, 3).is_err());
        assert_eq!(ty("C1"), ty("A1"));
        assert_eq!(ty("d2").low_rank_isomorphism(), Some("A1 x A1 (reducible)"));
        assert_eq!(ty("D3").low_rank_isomorphism(), Some("A3"));
        let err = "B1".parse::<RootSystemType>().unwrap_err();
        assert!(err.to_string().contains("r >= 2"), "{err}");
    }

    #[test]
    fn small_systems() {
        let a1 = build_root_system(ty("A1"));
        assert_eq!(a1.len(), 2);
        assert_eq!(a1.simple_roots().len(), 1);
        let alpha = &a1.simple_roots()[0];
        assert!(a1.contains(alpha) && a1.contains(&-alpha));

        assert_eq!(build_root_system(ty("G2")).len(), 12);
        assert_eq!(build_root_system(ty("E6")).len(), 72);
        assert_eq!(build_root_system(ty("E7")).len(), 126);
        assert_eq!(build_root_system(ty("E8")).len(), 240);
        assert_eq!(build_root_system(ty("F4")).len(), 48);
    }

    #[test]
    fn inner_products() {
        let a = Root::from_doubled(vec![2, 0]);
        let b = Root::from_doubled(vec![0, 2]);
        assert_eq!(inner_product(&a, &b).unwrap(), Rational64::from(0));
        let c = Root::from_doubled(vec![2, -2, 0]);
        assert_eq!(inner_product(&c, &c).unwrap(), Rational64::from(2));
        let z = Root::from_doubled(vec![0, 0, 0]);
        assert_eq!(inner_product(&c, &z).unwrap(), Rational64::from(0));
        assert_eq!(
            inner_product(&a, &c),
            Err(Error::Dimension { left: 2, right: 3 })
        );
        let h = Root::from_doubled(vec![1, 1]);
        assert_eq!(inner_product(&h, &a).unwrap(), Rational64::new(1, 2));
    }

    #[test]
    fn strong_orthogonality_b2_c2() {
        let b2 = build_root_system(ty("B2"));
        let c2 = build_root_system(ty("C2"));
        let a = Root::from_coords(&[1, -1]);
        let b = Root::from_coords(&[1, 1]);
        assert!(b2.is_strongly_orthogonal(&a, &b).unwrap());
        assert!(!c2.is_strongly_orthogonal(&a, &b).unwrap());
        for r in b2.roots() {
            assert!(!b2.is_strongly_orthogonal(r, r).unwrap());
        }
        let stranger = Root::from_coords(&[2, 2]);
        assert!(matches!(
            b2.is_strongly_orthogonal(&a, &stranger),
            Err(Error::Membership { .. })
        ));
    }

    #[test]
    fn closed_subsystems() {
        let a2 = build_root_system(ty("A2"));
        assert!(a2.is_closed_subsystem(a2.roots()).unwrap());
        assert!(a2.is_closed_subsystem(&[]).unwrap());
        assert!(!a2.is_closed_subsystem(a2.simple_roots()).unwrap());
        let bogus = [Root::from_coords(&[1, 1, 0])];
        assert!(a2.is_closed_subsystem(&bogus).is_err());
    }

    #[test]
    fn cartan_matrices_follow_bourbaki() {
        assert_eq!(
            build_root_system(ty("G2")).cartan_matrix(),
            vec![vec![2, -1], vec![-3, 2]]
        );
        assert_eq!(
            build_root_system(ty("B3")).cartan_matrix(),
            vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]
        );
        assert_eq!(
            build_root_system(ty("C3")).cartan_matrix(),
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );
        assert_eq!(
            build_root_system(ty("F4")).cartan_matrix(),
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2]
            ]
        );
        // E8 Bourbaki diagram: 1-3-4-5-6-7-8 with 2 attached to 4
        let e8 = build_root_system(ty("E8")).cartan_matrix();
        let edges: Vec<(usize, usize)> = (0..8)
            .flat_map(|i| (i + 1..8).map(move |j| (i, j)))
            .filter(|&(i, j)| e8[i][j] != 0)
            .map(|(i, j)| (i + 1, j + 1))
            .collect();
        assert_eq!(
            edges,
            vec![(1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
        );
    }

    #[test]
    fn positive_roots_are_half() {
        for t in RootSystemType::all_up_to(6) {
            let phi = build_root_system(t);
            assert_eq!(phi.positive_roots().len() * 2, phi.len(), "{t}");
        }
    }

    #[test]
    fn deterministic_construction() {
        let a = build_root_system(ty("E7"));
        let b = build_root_system(ty("E7"));
        assert_eq!(a.roots(), b.roots());
        assert_eq!(a.simple_roots(), b.simple_roots());
    }

    #[test]
    fn dump_json_shape() {
        let dump = build_root_system(ty("A1")).dump();
        let json = serde_json::to_value(&dump).unwrap();
        assert_eq!(json["type"], "A1");
        assert_eq!(json["ambient_dim"], 2);
        assert_eq!(json["doubled_coords"].as_array().unwrap().len(), 2);
    }
}
