//! Strong orthogonal rank: exact search with certificates, and the closed
//! form table for every irreducible type.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clique::{self, Graph};
use crate::roots::{build_root_system, Family, Root, RootSystem, RootSystemType};

/// A set of pairwise strongly orthogonal roots, sorted by doubled
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthCertificate {
    pub system_type: RootSystemType,
    pub roots: Vec<Root>,
}

/// Serialized form: `{system_type, n, roots}`.
#[derive(Serialize, Deserialize)]
struct CertificateJson {
    system_type: RootSystemType,
    n: usize,
    roots: Vec<Root>,
}

impl OrthCertificate {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(CertificateJson {
            system_type: self.system_type,
            n: self.roots.len(),
            roots: self.roots.clone(),
        })
        .expect("certificate serializes")
    }

    /// Parses the `{system_type, n, roots}` form; `n` must match the list.
    pub fn from_json(text: &str) -> Result<OrthCertificate, String> {
        let raw: CertificateJson = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if raw.n != raw.roots.len() {
            return Err(format!(
                "n = {} but {} roots listed",
                raw.n,
                raw.roots.len()
            ));
        }
        Ok(OrthCertificate {
            system_type: raw.system_type,
            roots: raw.roots,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateDefect {
    NotARoot,
    NotStronglyOrthogonal,
    NotCanonical,
}

impl fmt::Display for CertificateDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateDefect::NotARoot => "NotARoot",
            CertificateDefect::NotStronglyOrthogonal => "NotStronglyOrthogonal",
            CertificateDefect::NotCanonical => "NotCanonical",
        })
    }
}

pub fn verify_certificate(cert: &OrthCertificate) -> Result<(), CertificateDefect> {
    verify_certificate_in(cert, &build_root_system(cert.system_type))
}

/// Checks membership, then pairwise strong orthogonality, then strict
/// ascending order.
pub fn verify_certificate_in(
    cert: &OrthCertificate,
    phi: &RootSystem,
) -> Result<(), CertificateDefect> {
    if cert.system_type != phi.root_type() {
        return Err(CertificateDefect::NotARoot);
    }
    if !cert.roots.iter().all(|r| phi.contains(r)) {
        return Err(CertificateDefect::NotARoot);
    }
    for (i, a) in cert.roots.iter().enumerate() {
        for b in &cert.roots[i + 1..] {
            if !phi.strongly_orthogonal_unchecked(a, b) {
                return Err(CertificateDefect::NotStronglyOrthogonal);
            }
        }
    }
    if cert.roots.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CertificateDefect::NotCanonical);
    }
    Ok(())
}

/// Strong-orthogonality graph over a chosen vertex set of roots.
#[derive(Debug, Clone)]
pub struct OrthogonalityGraph {
    pub vertices: Vec<Root>,
    pub graph: Graph,
}

impl OrthogonalityGraph {
    /// One vertex per antipodal pair: the positive root.
    pub fn antipodal(phi: &RootSystem) -> OrthogonalityGraph {
        Self::over(phi, phi.positive_roots().to_vec())
    }

    /// Every root is a vertex.
    pub fn full(phi: &RootSystem) -> OrthogonalityGraph {
        Self::over(phi, phi.roots().to_vec())
    }

    fn over(phi: &RootSystem, mut vertices: Vec<Root>) -> OrthogonalityGraph {
        vertices.sort();
        let mut graph = Graph::new(vertices.len());
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if phi.strongly_orthogonal_unchecked(&vertices[i], &vertices[j]) {
                    graph.add_edge(i, j);
                }
            }
        }
        OrthogonalityGraph { vertices, graph }
    }
}

/// Exact strong orthogonal rank with the canonical certificate: the
/// lexicographically least maximum set of positive roots.
pub fn sork_exact(phi: &RootSystem) -> (usize, OrthCertificate) {
    let og = OrthogonalityGraph::antipodal(phi);
    // pairwise orthogonal nonzero vectors are linearly independent
    let clique = clique::max_clique_bounded(&og.graph, phi.root_type().rank());
    let roots: Vec<Root> = clique.iter().map(|&i| og.vertices[i].clone()).collect();
    (
        roots.len(),
        OrthCertificate {
            system_type: phi.root_type(),
            roots,
        },
    )
}

pub fn sork_of_type(t: RootSystemType) -> (usize, OrthCertificate) {
    sork_exact(&build_root_system(t))
}

/// Closed-form strong orthogonal rank.
pub fn sork_formula(t: RootSystemType) -> usize {
    let r = t.rank();
    match t.family() {
        Family::A => r.div_ceil(2),
        Family::B | Family::C => r,
        Family::D if r.is_multiple_of(2) => r,
        Family::D => r - 1,
        Family::E => match r {
            6 => 4,
            7 => 7,
            _ => 8,
        },
        Family::F => 4,
        Family::G => 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> RootSystemType {
        s.parse().unwrap()
    }

    #[test]
    fn formula_values() {
        assert_eq!(sork_formula(ty("B7")), 7);
        assert_eq!(sork_formula(ty("A4")), 2);
        assert_eq!(sork_formula(ty("A3")), 2);
        assert_eq!(sork_formula(ty("E6")), 4);
        assert_eq!(sork_formula(ty("E7")), 7);
        assert_eq!(sork_formula(ty("E8")), 8);
        assert_eq!(sork_formula(ty("F4")), 4);
        assert_eq!(sork_formula(ty("G2")), 2);
        assert_eq!(sork_formula(ty("D2")), 2);
        assert_eq!(sork_formula(ty("D3")), 2);
        assert_eq!(sork_formula(ty("D5")), 4);
        assert_eq!(sork_formula(ty("C1")), 1);
    }

    #[test]
    fn exact_small() {
        let (n, cert) = sork_of_type(ty("A1"));
        assert_eq!(n, 1);
        let a1 = build_root_system(ty("A1"));
        assert_eq!(cert.roots, a1.simple_roots().to_vec());
        assert_eq!(sork_of_type(ty("D2")).0, 2);
        assert_eq!(sork_of_type(ty("G2")).0, 2);
    }

    #[test]
    fn exact_e8() {
        let (n, cert) = sork_of_type(ty("E8"));
        assert_eq!(n, 8);
        assert_eq!(verify_certificate(&cert), Ok(()));
    }

    #[test]
    fn certificate_defects() {
        let (_, cert) = sork_of_type(ty("E6"));
        assert_eq!(cert.len(), 4);
        assert_eq!(verify_certificate(&cert), Ok(()));

        let mut dup = cert.clone();
        dup.roots.push(dup.roots[0].clone());
        assert_eq!(
            verify_certificate(&dup),
            Err(CertificateDefect::NotStronglyOrthogonal)
        );

        let mut rev = cert.clone();
        rev.roots.reverse();
        assert_eq!(
            verify_certificate(&rev),
            Err(CertificateDefect::NotCanonical)
        );

        let mut alien = cert.clone();
        alien.roots[0] = Root::from_doubled(vec![4, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(verify_certificate(&alien), Err(CertificateDefect::NotARoot));

        let empty = OrthCertificate {
            system_type: ty("E6"),
            roots: vec![],
        };
        assert_eq!(verify_certificate(&empty), Ok(()));
    }

    #[test]
    fn json_round_trip() {
        let (_, cert) = sork_of_type(ty("B3"));
        let json = cert.to_json();
        assert_eq!(json["n"], 3);
        assert_eq!(json["system_type"], "B3");
        let back = OrthCertificate::from_json(&json.to_string()).unwrap();
        assert_eq!(back, cert);
        let bad = r#"{"system_type":"B3","n":2,"roots":[]}"#;
        assert!(OrthCertificate::from_json(bad).is_err());
    }
}
