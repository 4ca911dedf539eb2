//! Paths, cycles, complete bipartite graphs and hypercubes, with the
//! closed-form answer to whether each is an EOCD graph.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} needs {requirement}")]
    OutOfRange {
        family: &'static str,
        requirement: &'static str,
    },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

fn out_of_range(family: &'static str, requirement: &'static str) -> FamilyError {
    FamilyError::OutOfRange { family, requirement }
}

/// `P_n`: vertices `0..n` in order.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(out_of_range("path", "n >= 1"));
    }
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("consecutive ids"))
}

/// `C_n`: vertices `0..n` around the cycle.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(out_of_range("cycle", "n >= 3"));
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("consecutive ids"))
}

/// `K_{r,t}`: one side is `0..r`, the other `r..r+t`.
pub fn complete_bipartite(r: usize, t: usize) -> Result<Graph, FamilyError> {
    if r == 0 || t == 0 {
        return Err(out_of_range("complete bipartite", "r, t >= 1"));
    }
    let edges = (0..r).flat_map(|a| (r..r + t).map(move |b| (a, b)));
    Ok(Graph::from_edges(r + t, edges).expect("sides are disjoint"))
}

/// `Q_n`: vertex ids are the binary labels, labelled as `n`-bit strings.
pub fn hypercube(n: u32) -> Result<Graph, FamilyError> {
    if n == 0 || n > 20 {
        return Err(out_of_range("hypercube", "1 <= n <= 20"));
    }
    let size = 1usize << n;
    let edges = (0..size).flat_map(|v| (0..n).map(move |b| (v, v ^ (1 << b))).filter(|&(v, w)| v < w));
    let labels = (0..size).map(|v| (v, format!("{v:0width$b}", width = n as usize)));
    Ok(Graph::from_edges(size, edges)
        .expect("flipping one bit stays in range")
        .with_labels(labels))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Path,
    Cycle,
    CompleteBipartite,
    Hypercube,
}

impl Family {
    fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }

    fn check_arity(self, params: &[usize]) -> Result<(), FamilyError> {
        if params.len() == self.arity() {
            Ok(())
        } else if self.arity() == 2 {
            Err(out_of_range("complete bipartite", "two parameters r t"))
        } else {
            Err(out_of_range(self.name(), "one parameter n"))
        }
    }

    fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::CompleteBipartite => "bipartite",
            Family::Hypercube => "hypercube",
        }
    }

    pub fn build(self, params: &[usize]) -> Result<Graph, FamilyError> {
        self.check_arity(params)?;
        match self {
            Family::Path => path(params[0]),
            Family::Cycle => cycle(params[0]),
            Family::CompleteBipartite => complete_bipartite(params[0], params[1]),
            Family::Hypercube => {
                hypercube(u32::try_from(params[0]).map_err(|_| out_of_range("hypercube", "1 <= n <= 20"))?)
            }
        }
    }

    /// Whether the family member is an EOCD graph, by the closed-form rule.
    pub fn predicted_eocd(self, params: &[usize]) -> Result<bool, FamilyError> {
        // Validate the parameters the same way the generator does.
        self.check_arity(params)?;
        Ok(match self {
            Family::Path => {
                path(params[0])?;
                params[0] % 4 != 1
            }
            Family::Cycle => {
                cycle(params[0])?;
                params[0].is_multiple_of(12)
            }
            Family::CompleteBipartite => {
                let (r, t) = (params[0], params[1]);
                if r == 0 || t == 0 {
                    return Err(out_of_range("complete bipartite", "r, t >= 1"));
                }
                r == 1 || t == 1
            }
            Family::Hypercube => {
                if params[0] == 0 {
                    return Err(out_of_range("hypercube", "1 <= n <= 20"));
                }
                params[0] == 1
            }
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "bipartite" | "complete-bipartite" => Ok(Family::CompleteBipartite),
            "hypercube" => Ok(Family::Hypercube),
            other => Err(FamilyError::UnknownFamily(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_members() {
        assert_eq!(path(2).unwrap().edge_count(), 1);
        assert_eq!(cycle(3).unwrap().edge_count(), 3);
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.n(), q3.edge_count()), (8, 12));
        assert_eq!(q3.label(5), Some("101"));
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert!(k23.has_edge(1, 4) && !k23.has_edge(2, 3));
    }

    #[test]
    fn predictions() {
        assert!(!Family::Path.predicted_eocd(&[5]).unwrap());
        assert!(Family::Cycle.predicted_eocd(&[12]).unwrap());
        assert!(!Family::CompleteBipartite.predicted_eocd(&[2, 3]).unwrap());
        assert!(Family::Hypercube.predicted_eocd(&[1]).unwrap());
    }

    #[test]
    fn errors() {
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(complete_bipartite(0, 3).is_err());
        assert_eq!("grid".parse::<Family>(), Err(FamilyError::UnknownFamily("grid".into())));
        assert!(Family::Path.build(&[1, 2]).is_err());
    }
}
