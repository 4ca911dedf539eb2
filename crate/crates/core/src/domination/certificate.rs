use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{cover_defect, CoverDefect, Neighborhood};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("D is not an EOD set: {0}")]
    InvalidD(CoverDefect),
    #[error("P is not an ECD set: {0}")]
    InvalidP(CoverDefect),
}

/// An EOD set `D` and an ECD set `P` of the same graph.
///
/// The pair splits the vertex set into `D ∩ P`, `D - P`, `P - D` and the
/// rest `R`; the accessors compute these blocks on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EocdCertificate {
    n: usize,
    d: VertexSet,
    p: VertexSet,
}

impl EocdCertificate {
    /// Validates both sets against `graph`.
    pub fn new(graph: &Graph, d: VertexSet, p: VertexSet) -> Result<Self, CertificateError> {
        if let Some(defect) = cover_defect(graph, &d, Neighborhood::Open) {
            return Err(CertificateError::InvalidD(defect));
        }
        if let Some(defect) = cover_defect(graph, &p, Neighborhood::Closed) {
            return Err(CertificateError::InvalidP(defect));
        }
        Ok(EocdCertificate { n: graph.n(), d, p })
    }

    pub fn d(&self) -> &VertexSet {
        &self.d
    }

    pub fn p(&self) -> &VertexSet {
        &self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn into_sets(self) -> (VertexSet, VertexSet) {
        (self.d, self.p)
    }

    /// `D ∩ P`
    pub fn dp(&self) -> VertexSet {
        self.d.intersection(&self.p)
    }

    /// `D - P`
    pub fn d_only(&self) -> VertexSet {
        self.d.difference(&self.p)
    }

    /// `P - D`
    pub fn p_only(&self) -> VertexSet {
        self.p.difference(&self.d)
    }

    /// `V - (D ∪ P)`
    pub fn r(&self) -> VertexSet {
        self.d.union(&self.p).complement(self.n)
    }

    pub fn record(&self) -> CertificateRecord {
        CertificateRecord {
            d: self.d.to_vec(),
            p: self.p.to_vec(),
            dp: self.dp().to_vec(),
            d_only: self.d_only().to_vec(),
            p_only: self.p_only().to_vec(),
            r: self.r().to_vec(),
        }
    }
}

/// Machine-readable form of a certificate: sorted id arrays.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    #[serde(rename = "D")]
    pub d: Vec<usize>,
    #[serde(rename = "P")]
    pub p: Vec<usize>,
    pub dp: Vec<usize>,
    pub d_only: Vec<usize>,
    pub p_only: Vec<usize>,
    pub r: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_blocks() {
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let cert = EocdCertificate::new(&p4, VertexSet::from([1, 2]), VertexSet::from([0, 3])).unwrap();
        let rec = cert.record();
        assert_eq!(rec.dp, Vec::<usize>::new());
        assert_eq!(rec.d_only, vec![1, 2]);
        assert_eq!(rec.p_only, vec![0, 3]);
        assert_eq!(rec.r, Vec::<usize>::new());

        let json = serde_json::to_value(&rec).unwrap();
        assert_eq!(json["D"], serde_json::json!([1, 2]));
        assert_eq!(json["p_only"], serde_json::json!([0, 3]));
    }

    #[test]
    fn rejects_invalid_sets() {
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let err = EocdCertificate::new(&p4, VertexSet::from([1, 2]), VertexSet::from([1])).unwrap_err();
        assert_eq!(err, CertificateError::InvalidP(CoverDefect::Uncovered(3)));
        let err = EocdCertificate::new(&p4, VertexSet::from([0]), VertexSet::from([0, 3])).unwrap_err();
        assert!(matches!(err, CertificateError::InvalidD(_)));
    }
}
