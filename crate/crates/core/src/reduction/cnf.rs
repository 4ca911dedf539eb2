use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest variable count the exhaustive one-in-three search accepts.
pub const BRUTE_FORCE_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("clause {clause}: variable {var} is out of range for {n_vars} variables")]
    VariableOutOfRange { clause: usize, var: usize, n_vars: usize },
    #[error("clause {clause} mentions variable {var} more than once")]
    RepeatedVariable { clause: usize, var: usize },
    #[error("line {line}: {message}")]
    Dimacs { line: usize, message: String },
    #[error("{n_vars} variables exceed the exhaustive search limit of {limit}")]
    TooManyVariables { n_vars: usize, limit: usize },
}

/// A literal over a 0-based variable index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    pub fn value(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }

    fn dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }
}

/// A formula whose clauses each have three literals over distinct variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
    n_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(n_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self, CnfError> {
        for (j, clause) in clauses.iter().enumerate() {
            for (k, lit) in clause.iter().enumerate() {
                if lit.var >= n_vars {
                    return Err(CnfError::VariableOutOfRange {
                        clause: j,
                        var: lit.var,
                        n_vars,
                    });
                }
                if clause[..k].iter().any(|other| other.var == lit.var) {
                    return Err(CnfError::RepeatedVariable {
                        clause: j,
                        var: lit.var,
                    });
                }
            }
        }
        Ok(CnfFormula { n_vars, clauses })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// Every clause has exactly one true literal.
    pub fn one_in_three(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.n_vars
            && self
                .clauses
                .iter()
                .all(|c| c.iter().filter(|l| l.value(assignment)).count() == 1)
    }

    /// Parses the DIMACS subset: `c` comments, a `p cnf V C` header, then `C`
    /// lines of three nonzero literals followed by `0`.
    pub fn parse_dimacs(text: &str) -> Result<Self, CnfError> {
        let err = |line: usize, message: String| CnfError::Dimacs { line, message };
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if line.starts_with('%') {
                break;
            }
            if line.starts_with('p') {
                if header.is_some() {
                    return Err(err(line_no, "second header".into()));
                }
                let words: Vec<&str> = line.split_whitespace().collect();
                let parsed = match words[..] {
                    ["p", "cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                    _ => None,
                };
                header = Some(
                    parsed.ok_or_else(|| err(line_no, format!("expected `p cnf <vars> <clauses>`, found `{line}`")))?,
                );
                continue;
            }
            let Some((n_vars, _)) = header else {
                return Err(err(line_no, "clause before the `p cnf` header".into()));
            };
            let mut lits = Vec::with_capacity(3);
            let mut words = line.split_whitespace();
            for word in words.by_ref() {
                let value: i64 = word
                    .parse()
                    .map_err(|_| err(line_no, format!("bad literal `{word}`")))?;
                if value == 0 {
                    break;
                }
                let var = value.unsigned_abs() as usize;
                if var > n_vars {
                    return Err(err(line_no, format!("literal `{word}` exceeds {n_vars} variables")));
                }
                lits.push(Literal {
                    var: var - 1,
                    positive: value > 0,
                });
            }
            if let Some(extra) = words.next() {
                return Err(err(line_no, format!("unexpected `{extra}` after the terminating 0")));
            }
            if !line.split_whitespace().any(|w| w == "0") {
                return Err(err(line_no, "clause is not terminated by 0".into()));
            }
            let clause: [Literal; 3] = lits
                .try_into()
                .map_err(|l: Vec<Literal>| err(line_no, format!("expected 3 literals, found {}", l.len())))?;
            clauses.push((line_no, clause));
        }
        let (n_vars, count) = header.ok_or_else(|| err(0, "missing `p cnf` header".into()))?;
        if clauses.len() != count {
            return Err(err(
                0,
                format!("header announces {count} clauses, found {}", clauses.len()),
            ));
        }
        let lines: Vec<usize> = clauses.iter().map(|&(l, _)| l).collect();
        CnfFormula::new(n_vars, clauses.into_iter().map(|(_, c)| c).collect()).map_err(|e| match e {
            CnfError::RepeatedVariable { clause, var } => err(
                lines[clause],
                format!("variable {} appears twice in one clause", var + 1),
            ),
            other => other,
        })
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.n_vars, self.clauses.len());
        for c in &self.clauses {
            out.push_str(&format!("{} {} {} 0\n", c[0].dimacs(), c[1].dimacs(), c[2].dimacs()));
        }
        out
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let clause = |c: &[Literal; 3]| {
            let lits: Vec<String> = c
                .iter()
                .map(|l| format!("{}x{}", if l.positive { "" } else { "¬" }, l.var + 1))
                .collect();
            format!("({})", lits.join(" ∨ "))
        };
        let parts: Vec<String> = self.clauses.iter().map(clause).collect();
        f.write_str(&parts.join(" ∧ "))
    }
}

/// Every one-in-three satisfying assignment, in increasing binary order
/// (variable 0 is the least significant bit).
pub fn brute_force_one_in_three(formula: &CnfFormula) -> Result<Vec<Vec<bool>>, CnfError> {
    let n = formula.n_vars();
    if n > BRUTE_FORCE_LIMIT {
        return Err(CnfError::TooManyVariables {
            n_vars: n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut out = Vec::new();
    let mut assignment = vec![false; n];
    for bits in 0u32..1 << n {
        for (i, slot) in assignment.iter_mut().enumerate() {
            *slot = bits >> i & 1 == 1;
        }
        if formula.one_in_three(&assignment) {
            out.push(assignment.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clause(a: i64, b: i64, c: i64) -> [Literal; 3] {
        [a, b, c].map(|x| Literal {
            var: x.unsigned_abs() as usize - 1,
            positive: x > 0,
        })
    }

    #[test]
    fn single_clause_has_three_solutions() {
        let f = CnfFormula::new(3, vec![clause(1, 2, 3)]).unwrap();
        let all = brute_force_one_in_three(&f).unwrap();
        assert_eq!(
            all,
            vec![
                vec![true, false, false],
                vec![false, true, false],
                vec![false, false, true]
            ]
        );
    }

    #[test]
    fn two_clause_example_is_unsatisfiable() {
        // x1 + x2 + x3 = 1 and (1 - x1) + x2 + x3 = 1 force x1 = 1 - x1.
        let f = CnfFormula::new(3, vec![clause(1, 2, 3), clause(-1, 2, 3)]).unwrap();
        assert!(brute_force_one_in_three(&f).unwrap().is_empty());
        let g = CnfFormula::new(3, vec![clause(1, 2, 3), clause(-1, -2, 3)]).unwrap();
        assert_eq!(
            brute_force_one_in_three(&g).unwrap(),
            vec![vec![true, false, false], vec![false, true, false]]
        );
    }

    #[test]
    fn validation() {
        assert_eq!(
            CnfFormula::new(3, vec![clause(1, 1, 2)]),
            Err(CnfError::RepeatedVariable { clause: 0, var: 0 })
        );
        assert!(matches!(
            CnfFormula::new(2, vec![clause(1, 2, 3)]),
            Err(CnfError::VariableOutOfRange { .. })
        ));
        let big = CnfFormula::new(25, vec![]).unwrap();
        assert!(brute_force_one_in_three(&big).is_err());
    }

    #[test]
    fn dimacs_round_trip() {
        let text = "c example\np cnf 4 2\n1 -2 3 0\n-1 2 4 0\n";
        let f = CnfFormula::parse_dimacs(text).unwrap();
        assert_eq!(f.clauses()[1], clause(-1, 2, 4));
        assert_eq!(CnfFormula::parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn dimacs_errors() {
        let bad = [
            ("p cnf 3 1\n1 2 0\n", 2),
            ("p cnf 3 1\n1 2 3\n", 2),
            ("1 2 3 0\n", 1),
            ("p cnf 3 1\n1 2 5 0\n", 2),
            ("p cnf 3 1\n1 -1 2 0\n", 2),
            ("p cnf 3 1\n1 2 x 0\n", 2),
        ];
        for (text, line) in bad {
            match CnfFormula::parse_dimacs(text) {
                Err(CnfError::Dimacs { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(CnfFormula::parse_dimacs("p cnf 3 2\n1 2 3 0\n").is_err());
    }
}
