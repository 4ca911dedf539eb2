//! Sierpinski graphs `S_p^n`.
//!
//! Vertices are words `s_n ... s_1` over `{0, ..., p-1}`; the id of a word is
//! its value in base `p` with `s_n` most significant. Two words are adjacent
//! when, for some `δ`, they agree above position `δ`, differ at `δ`, and below
//! `δ` each consists of the other's digit at `δ`.
//!
//! For `p >= 3` and `n >= 2` the graph is an EOCD graph exactly when `p` is
//! even; an explicit EOD set of size `p^(n-1)` is given by
//! [`sierpinski_eod_set`].

use thiserror::Error;

use crate::domination::is_eod_set;
use crate::graph::{Graph, VertexSet};

/// Largest vertex count built by default.
pub const DEFAULT_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SierpinskiError {
    #[error("the base p must be at least 1")]
    ZeroBase,
    #[error("S_{p}^{n} has more than {cap} vertices")]
    TooLarge { p: usize, n: usize, cap: usize },
    #[error("S_{p}^{n} is out of scope: {requirement}")]
    OutOfScope {
        p: usize,
        n: usize,
        requirement: &'static str,
    },
}

fn order(p: usize, n: usize, cap: usize) -> Result<usize, SierpinskiError> {
    if p == 0 {
        return Err(SierpinskiError::ZeroBase);
    }
    let too_large = SierpinskiError::TooLarge { p, n, cap };
    let size = u32::try_from(n)
        .ok()
        .and_then(|e| p.checked_pow(e))
        .ok_or(too_large.clone())?;
    if size > cap {
        return Err(too_large);
    }
    Ok(size)
}

/// Digit `s_d` (1-based position) of vertex `id`.
fn digit(id: usize, p: usize, d: usize) -> usize {
    id / p.pow(d as u32 - 1) % p
}

/// The word `j j ... j` of the given length.
fn repeated(j: usize, p: usize, len: usize) -> usize {
    (0..len).fold(0, |acc, _| acc * p + j)
}

/// Label of a vertex as its digit string, `.`-separated when `p > 10`.
pub fn label(id: usize, p: usize, n: usize) -> String {
    let digits = (1..=n).rev().map(|d| digit(id, p, d).to_string());
    if p > 10 {
        digits.collect::<Vec<_>>().join(".")
    } else {
        digits.collect()
    }
}

/// Edges from the digit rule: for each vertex and each `δ`, its unique
/// neighbor at level `δ` if there is one.
fn direct_edges(p: usize, n: usize, size: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for s in 0..size {
        for delta in 1..=n {
            let sd = digit(s, p, delta);
            let targets: Vec<usize> = if delta == 1 {
                (0..p).filter(|&c| c != sd).collect()
            } else {
                let c = digit(s, p, 1);
                let uniform = (1..delta).all(|d| digit(s, p, d) == c);
                if uniform && c != sd {
                    vec![c]
                } else {
                    Vec::new()
                }
            };
            for c in targets {
                // t agrees above δ, has c at δ and s_δ below δ.
                let scale = p.pow(delta as u32 - 1);
                let high = s / (scale * p) * (scale * p);
                let t = high + c * scale + repeated(sd, p, delta - 1);
                if s < t {
                    edges.push((s, t));
                }
            }
        }
    }
    edges
}

/// Edges from the recursion: `p` shifted copies of `S_p^(n-1)` joined by
/// the edges `{i j^(n-1), j i^(n-1)}`.
fn recursive_edges(p: usize, n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for level in 1..=n {
        let block = p.pow(level as u32 - 1);
        let mut next = Vec::with_capacity(edges.len() * p + p * p);
        for i in 0..p {
            next.extend(edges.iter().map(|&(s, t)| (i * block + s, i * block + t)));
        }
        for i in 0..p {
            for j in i + 1..p {
                next.push((
                    i * block + repeated(j, p, level - 1),
                    j * block + repeated(i, p, level - 1),
                ));
            }
        }
        edges = next;
    }
    edges
}

fn normalized(mut edges: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    for e in &mut edges {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    edges.sort_unstable();
    edges
}

/// `S_p^n` with at most [`DEFAULT_CAP`] vertices.
pub fn sierpinski(p: usize, n: usize) -> Result<Graph, SierpinskiError> {
    sierpinski_with_cap(p, n, DEFAULT_CAP)
}

/// `S_p^n`, built from the digit rule and from the recursion; the two edge
/// sets are asserted equal.
pub fn sierpinski_with_cap(p: usize, n: usize, cap: usize) -> Result<Graph, SierpinskiError> {
    let size = order(p, n, cap)?;
    let (direct, recursive) = rayon::join(
        || normalized(direct_edges(p, n, size)),
        || normalized(recursive_edges(p, n)),
    );
    assert_eq!(direct, recursive, "digit rule and recursion disagree on S_{p}^{n}");
    let graph = Graph::from_edges(size, direct).expect("edges stay inside the vertex range");
    Ok(if n == 0 {
        graph
    } else {
        graph.with_labels((0..size).map(|v| (v, label(v, p, n))))
    })
}

/// Whether words `s` and `t` are adjacent, straight from the definition.
pub fn adjacent_by_definition(s: usize, t: usize, p: usize, n: usize) -> bool {
    (1..=n).any(|delta| {
        let (sd, td) = (digit(s, p, delta), digit(t, p, delta));
        (delta + 1..=n).all(|d| digit(s, p, d) == digit(t, p, d))
            && sd != td
            && (1..delta).all(|d| digit(s, p, d) == td && digit(t, p, d) == sd)
    })
}

/// The extreme vertices `i i ... i`.
pub fn extreme_vertices(p: usize, n: usize) -> Vec<usize> {
    (0..p).map(|i| repeated(i, p, n)).collect()
}

fn even_scope(p: usize, n: usize) -> Result<(), SierpinskiError> {
    if p < 4 || p % 2 == 1 || n < 2 {
        return Err(SierpinskiError::OutOfScope {
            p,
            n,
            requirement: "p must be even and at least 4, and n at least 2",
        });
    }
    Ok(())
}

/// The EOD set `∪ D_i` with `D_2i = {s (2i)(2i+1)}` and `D_2i+1 = {s (2i+1)(2i)}`.
pub fn sierpinski_eod_set(p: usize, n: usize) -> Result<VertexSet, SierpinskiError> {
    even_scope(p, n)?;
    let size = order(p, n, usize::MAX)?;
    let prefixes = size / (p * p);
    let mut d = VertexSet::new(size);
    for prefix in 0..prefixes {
        for i in (0..p).step_by(2) {
            d.insert(prefix * p * p + i * p + (i + 1));
            d.insert(prefix * p * p + (i + 1) * p + i);
        }
    }
    if size <= DEFAULT_CAP {
        let graph = sierpinski(p, n)?;
        assert!(is_eod_set(&graph, &d), "the explicit set is an EOD set of S_{p}^{n}");
    }
    Ok(d)
}

/// Whether `S_p^n` is an EOCD graph, for `p >= 3` and `n >= 2`.
pub fn sierpinski_is_eocd(p: usize, n: usize) -> Result<bool, SierpinskiError> {
    if p < 3 || n < 2 {
        return Err(SierpinskiError::OutOfScope {
            p,
            n,
            requirement: "p must be at least 3 and n at least 2",
        });
    }
    Ok(p.is_multiple_of(2))
}

/// `γ_t(S_p^n) = p^(n-1)` for even `p >= 4` and `n >= 2`.
pub fn sierpinski_gamma_t(p: usize, n: usize) -> Result<usize, SierpinskiError> {
    even_scope(p, n)?;
    let size = order(p, n, usize::MAX)?;
    Ok(size / p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let k4 = sierpinski(4, 1).unwrap();
        assert_eq!(k4.edge_count(), 6);
        let p8 = sierpinski(2, 3).unwrap();
        assert!(p8.is_tree() && p8.max_degree() == 2);
        let s32 = sierpinski(3, 2).unwrap();
        assert_eq!((s32.n(), s32.edge_count()), (9, 12));
        let (a, b) = (s32.vertex_by_label("01").unwrap(), s32.vertex_by_label("10").unwrap());
        assert!(s32.has_edge(a, b));
        assert_eq!(sierpinski(5, 0).unwrap().n(), 1);
        assert_eq!(sierpinski(1, 4).unwrap().n(), 1);
    }

    #[test]
    fn constructions_match_definition() {
        for p in 1..=6 {
            for n in 0..=3 {
                let g = sierpinski(p, n).unwrap();
                let size = g.n();
                assert_eq!(g.edge_count(), p * (size - 1) / 2);
                for s in 0..size {
                    for t in s + 1..size {
                        assert_eq!(
                            g.has_edge(s, t),
                            adjacent_by_definition(s, t, p, n),
                            "S_{p}^{n}: {s} {t}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn eod_sets() {
        let d = sierpinski_eod_set(4, 2).unwrap();
        let g = sierpinski(4, 2).unwrap();
        let mut labels: Vec<&str> = d.iter().map(|v| g.label(v).unwrap()).collect();
        labels.sort_unstable();
        assert_eq!(labels, vec!["01", "10", "23", "32"]);
        assert_eq!(sierpinski_eod_set(4, 3).unwrap().len(), 16);
        assert_eq!(sierpinski_eod_set(6, 2).unwrap().len(), 6);
        assert!(sierpinski_eod_set(5, 2).is_err());
    }

    #[test]
    fn scope_and_formulas() {
        assert_eq!(sierpinski_is_eocd(3, 2), Ok(false));
        assert_eq!(sierpinski_is_eocd(6, 3), Ok(true));
        assert!(sierpinski_is_eocd(2, 5).is_err());
        assert_eq!(sierpinski_gamma_t(4, 3), Ok(16));
        assert_eq!(sierpinski(0, 2), Err(SierpinskiError::ZeroBase));
        assert!(matches!(sierpinski(5, 6), Err(SierpinskiError::TooLarge { .. })));
        assert_eq!(label(7, 12, 2), "0.7");
        assert_eq!(extreme_vertices(3, 2), vec![0, 4, 8]);
    }
}
