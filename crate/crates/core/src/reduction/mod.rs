//! Reduction from one-in-three 3-SAT to the EOCD problem.
//!
//! Each variable `x_i` becomes a 23-vertex gadget and each clause `c_j` a
//! vertex `y_j` joined to `u_i` or `ubar_i` for every positive or negative
//! occurrence of `x_i`. The resulting graph is an EOCD graph exactly when
//! the formula has an assignment with one true literal per clause.

mod cnf;
mod gadget;

use thiserror::Error;

pub use cnf::{brute_force_one_in_three, CnfError, CnfFormula, Literal, BRUTE_FORCE_LIMIT};
pub use gadget::{build_gadget, gadget_edges, GadgetLayout, GADGET_SIZE, LOCAL_NAMES};

use crate::domination::{is_ecd_set, is_eod_set, EocdCertificate};
use crate::graph::{Graph, VertexSet};
use gadget::{c, w, Q, U, UBAR, V1, V2};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("assignment has {found} values for {expected} variables")]
    AssignmentLength { expected: usize, found: usize },
    #[error("assignment does not make exactly one literal true in every clause")]
    NotOneInThree,
    #[error("graph does not match the reduction of this formula")]
    GraphMismatch,
    #[error("D is not an EOD set of the reduction graph")]
    InvalidD,
    #[error("P is not an ECD set of the reduction graph")]
    InvalidP,
    #[error("exchanging vertices in gadgets {variables:?} did not give an ECD set")]
    Normalization { variables: Vec<usize> },
    #[error("gadget {variable} has neither u nor ubar in D and P after normalization")]
    NotNice { variable: usize },
    #[error("the extracted assignment is not one-in-three satisfying")]
    Extraction,
}

/// The graph `G_F` of a formula.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub graph: Graph,
    pub layout: GadgetLayout,
    pub formula: CnfFormula,
}

/// Builds `G_F`: gadgets in variable order, then the clause vertices.
pub fn build_reduction(formula: &CnfFormula) -> Reduction {
    let layout = GadgetLayout {
        n_vars: formula.n_vars(),
        n_clauses: formula.clauses().len(),
    };
    let mut edges = Vec::with_capacity(30 * layout.n_vars + 3 * layout.n_clauses);
    for i in 0..layout.n_vars {
        edges.extend(
            gadget_edges()
                .into_iter()
                .map(|(a, b)| (layout.vertex(i, a), layout.vertex(i, b))),
        );
    }
    for (j, clause) in formula.clauses().iter().enumerate() {
        for lit in clause {
            let end = if lit.positive {
                layout.u(lit.var)
            } else {
                layout.ubar(lit.var)
            };
            edges.push((layout.clause(j), end));
        }
    }
    let graph = Graph::from_edges(layout.n(), edges)
        .expect("distinct variables give distinct edges")
        .with_labels((0..layout.n()).map(|v| (v, layout.label(v))));
    Reduction {
        graph,
        layout,
        formula: formula.clone(),
    }
}

const ALWAYS_D: [usize; 4] = [Q, c(1), c(4), c(5)];
const ALWAYS_P: [usize; 3] = [Q, c(3), c(6)];
const TRUE_D: [usize; 4] = [U, V1, w(4), w(5)];
const TRUE_P: [usize; 3] = [U, w(3), w(7)];
const FALSE_D: [usize; 4] = [UBAR, V2, w(3), w(4)];
const FALSE_P: [usize; 3] = [UBAR, w(2), w(5)];

impl Reduction {
    /// The certificate induced by a one-in-three satisfying assignment.
    pub fn witness_from_assignment(&self, assignment: &[bool]) -> Result<EocdCertificate, ReductionError> {
        if assignment.len() != self.layout.n_vars {
            return Err(ReductionError::AssignmentLength {
                expected: self.layout.n_vars,
                found: assignment.len(),
            });
        }
        if !self.formula.one_in_three(assignment) {
            return Err(ReductionError::NotOneInThree);
        }
        let n = self.layout.n();
        let mut d = VertexSet::new(n);
        let mut p = VertexSet::new(n);
        for (i, &value) in assignment.iter().enumerate() {
            let (dv, pv) = if value { (TRUE_D, TRUE_P) } else { (FALSE_D, FALSE_P) };
            for local in ALWAYS_D.into_iter().chain(dv) {
                d.insert(self.layout.vertex(i, local));
            }
            for local in ALWAYS_P.into_iter().chain(pv) {
                p.insert(self.layout.vertex(i, local));
            }
        }
        let cert = EocdCertificate::new(&self.graph, d, p);
        Ok(cert.expect("the assignment witness is an EOD set and an ECD set"))
    }

    /// Reads an assignment off a certificate. Gadgets where neither `u` nor
    /// `ubar` lies in `D ∩ P` all have their part of `P` exchanged together
    /// before the result is checked.
    pub fn assignment_from_witness(&self, d: &VertexSet, p: &VertexSet) -> Result<Vec<bool>, ReductionError> {
        if self.graph.n() != self.layout.n() {
            return Err(ReductionError::GraphMismatch);
        }
        if !is_eod_set(&self.graph, d) {
            return Err(ReductionError::InvalidD);
        }
        if !is_ecd_set(&self.graph, p) {
            return Err(ReductionError::InvalidP);
        }
        let at = |i: usize, local: usize| self.layout.vertex(i, local);
        let nice = |i: usize, p: &VertexSet| [U, UBAR].iter().any(|&x| d.contains(at(i, x)) && p.contains(at(i, x)));
        let mut normalized = p.clone();
        let mut exchanged = Vec::new();
        for i in 0..self.layout.n_vars {
            if nice(i, p) {
                continue;
            }
            let (remove, add): (&[usize], &[usize]) = if p.contains(at(i, U)) {
                (&[U, w(3), w(6), w(7)], &[UBAR, w(2), w(5)])
            } else if p.contains(at(i, UBAR)) {
                (&[UBAR, w(5), w(1), w(2)], &[U, w(3), w(7)])
            } else {
                return Err(ReductionError::NotNice { variable: i });
            };
            for &local in remove {
                normalized.remove(at(i, local));
            }
            for &local in add {
                normalized.insert(at(i, local));
            }
            exchanged.push(i);
        }
        if !is_ecd_set(&self.graph, &normalized) {
            return Err(ReductionError::Normalization { variables: exchanged });
        }
        if let Some(i) = (0..self.layout.n_vars).find(|&i| !nice(i, &normalized)) {
            return Err(ReductionError::NotNice { variable: i });
        }
        let assignment: Vec<bool> = (0..self.layout.n_vars)
            .map(|i| d.contains(at(i, U)) && normalized.contains(at(i, U)))
            .collect();
        if !self.formula.one_in_three(&assignment) {
            return Err(ReductionError::Extraction);
        }
        Ok(assignment)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{find_eocd, SearchMode};

    fn formula(n: usize, clauses: &[[i64; 3]]) -> CnfFormula {
        let lit = |x: i64| Literal {
            var: x.unsigned_abs() as usize - 1,
            positive: x > 0,
        };
        CnfFormula::new(n, clauses.iter().map(|c| c.map(lit)).collect()).unwrap()
    }

    #[test]
    fn sizes() {
        let r = build_reduction(&formula(3, &[[1, 2, 3]]));
        assert_eq!((r.graph.n(), r.graph.edge_count()), (70, 93));
        assert_eq!(r.graph.degree(69), 3);
        assert_eq!(r.graph.label(69), Some("y_1"));
        let bare = build_reduction(&formula(1, &[]));
        assert_eq!((bare.graph.n(), bare.graph.edge_count()), (23, 30));
        let neg = build_reduction(&formula(3, &[[1, -2, 3]]));
        assert!(neg.graph.has_edge(69, neg.layout.ubar(1)));
    }

    #[test]
    fn witness_sizes_and_errors() {
        let r = build_reduction(&formula(3, &[[1, 2, 3]]));
        let cert = r.witness_from_assignment(&[true, false, false]).unwrap();
        assert_eq!((cert.d().len(), cert.p().len()), (24, 18));
        assert_eq!(
            r.witness_from_assignment(&[true, true, false]).unwrap_err(),
            ReductionError::NotOneInThree
        );
        assert!(r.witness_from_assignment(&[true]).is_err());
        let bare = build_reduction(&formula(1, &[]));
        assert!(bare.witness_from_assignment(&[true]).is_ok());
        assert!(bare.witness_from_assignment(&[false]).is_ok());
    }

    #[test]
    fn round_trip() {
        let r = build_reduction(&formula(4, &[[1, 2, 3], [-1, -2, 4]]));
        for a in brute_force_one_in_three(&r.formula).unwrap() {
            let cert = r.witness_from_assignment(&a).unwrap();
            assert_eq!(r.assignment_from_witness(cert.d(), cert.p()).unwrap(), a);
        }
    }

    #[test]
    fn solver_witness_decodes() {
        let r = build_reduction(&formula(3, &[[1, 2, 3]]));
        let cert = find_eocd(&r.graph, SearchMode::Any).unwrap();
        let a = r.assignment_from_witness(cert.d(), cert.p()).unwrap();
        assert_eq!(a.iter().filter(|&&x| x).count(), 1);
    }

    #[test]
    fn unsatisfiable_has_no_certificate() {
        let r = build_reduction(&formula(3, &[[1, 2, 3], [-1, 2, 3]]));
        assert!(find_eocd(&r.graph, SearchMode::Any).is_none());
    }

    #[test]
    fn exchanges_apply_together() {
        // The first solution found has u in P and ubar in D in two gadgets that
        // share the clause vertex; exchanging only one overcovers it.
        let r = build_reduction(&formula(3, &[[-1, 2, 3]]));
        let cert = find_eocd(&r.graph, SearchMode::Any).unwrap();
        let non_nice = (0..3)
            .filter(|&i| {
                ![r.layout.u(i), r.layout.ubar(i)]
                    .iter()
                    .any(|&x| cert.d().contains(x) && cert.p().contains(x))
            })
            .count();
        assert!(non_nice >= 2);
        assert_eq!(
            r.assignment_from_witness(cert.d(), cert.p()).unwrap(),
            vec![false, false, false]
        );
    }

    #[test]
    fn invalid_witness() {
        let r = build_reduction(&formula(3, &[[1, 2, 3]]));
        let cert = r.witness_from_assignment(&[false, true, false]).unwrap();
        let mut d = cert.d().clone();
        d.remove(r.layout.u(1));
        assert_eq!(r.assignment_from_witness(&d, cert.p()), Err(ReductionError::InvalidD));
    }
}
