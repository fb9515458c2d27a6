//! Acyclic orientations of Dyck graphs, the posets they induce, and the
//! partition of `S_n` into linear-extension classes.

use std::fmt;

use thiserror::Error;

use crate::hessenberg::DyckGraph;
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("orientation contains a directed cycle")]
    Cyclic,
    #[error("expected {expected} edge directions, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid direction character {0:?}; use 0 or 1")]
    BadBit(char),
    #[error("{0:?} is not a permutation of 1..={1}")]
    NotPermutation(Vec<usize>, usize),
}

/// Directions for the edges of a Dyck graph, in the graph's sorted edge order.
/// `true` (UP) orients `(i, j)` as `i → j`; `false` (DOWN) as `j → i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    graph: DyckGraph,
    up: Vec<bool>,
}

impl Orientation {
    pub fn new(graph: &DyckGraph, up: Vec<bool>) -> Result<Self, OrientationError> {
        if up.len() != graph.edges().len() {
            return Err(OrientationError::LengthMismatch {
                expected: graph.edges().len(),
                got: up.len(),
            });
        }
        let o = Orientation { graph: graph.clone(), up };
        if !o.is_acyclic() {
            return Err(OrientationError::Cyclic);
        }
        Ok(o)
    }

    /// Parses the bit string form, one character per sorted edge, `1` = UP.
    pub fn from_bits(graph: &DyckGraph, bits: &str) -> Result<Self, OrientationError> {
        let up = bits
            .chars()
            .map(|c| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                other => Err(OrientationError::BadBit(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Orientation::new(graph, up)
    }

    pub fn to_bits(&self) -> String {
        self.up.iter().map(|&u| if u { '1' } else { '0' }).collect()
    }

    pub fn graph(&self) -> &DyckGraph {
        &self.graph
    }

    pub fn directions(&self) -> &[bool] {
        &self.up
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Arcs `(from, to)` in edge order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph
            .edges()
            .iter()
            .zip(&self.up)
            .map(|(&(i, j), &u)| if u { (i, j) } else { (j, i) })
    }

    /// Number of increasing arcs `i → j`, `i < j`.
    pub fn asc_arcs(&self) -> usize {
        self.up.iter().filter(|&&u| u).count()
    }

    pub fn desc_arcs(&self) -> usize {
        self.up.len() - self.asc_arcs()
    }

    fn is_acyclic(&self) -> bool {
        let n = self.n();
        let mut indegree = vec![0usize; n + 1];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for (a, b) in self.arcs() {
            out[a].push(b);
            indegree[b] += 1;
        }
        let mut ready: Vec<usize> = (1..=n).filter(|&v| indegree[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = ready.pop() {
            removed += 1;
            for &w in &out[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.push(w);
                }
            }
        }
        removed == n
    }

    /// The partial order `P(o)`: transitive closure of the arcs.
    pub fn poset(&self) -> Poset {
        let n = self.n();
        let mut less = vec![vec![false; n + 1]; n + 1];
        for (a, b) in self.arcs() {
            less[a][b] = true;
        }
        for k in 1..=n {
            for a in 1..=n {
                if less[a][k] {
                    for b in 1..=n {
                        if less[k][b] {
                            less[a][b] = true;
                        }
                    }
                }
            }
        }
        Poset { n, less }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bits())
    }
}

/// A strict partial order on `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    less: Vec<Vec<bool>>,
}

impl Poset {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `a <_P b`.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.less[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) || self.lt(b, a)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (1..=self.n).filter(|&b| (1..=self.n).all(|a| !self.lt(a, b))).collect()
    }

    pub fn is_linear_extension(&self, word: &[usize]) -> bool {
        let mut pos = vec![usize::MAX; self.n + 1];
        for (k, &v) in word.iter().enumerate() {
            if v == 0 || v > self.n || pos[v] != usize::MAX {
                return false;
            }
            pos[v] = k;
        }
        if word.len() != self.n {
            return false;
        }
        (1..=self.n).all(|a| (1..=self.n).all(|b| !self.lt(a, b) || pos[a] < pos[b]))
    }

    /// All linear extensions, lexicographically sorted.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        fn rec(p: &Poset, placed: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == p.n {
                out.push(cur.clone());
                return;
            }
            for v in 1..=p.n {
                if placed[v] || (1..=p.n).any(|a| !placed[a] && p.lt(a, v)) {
                    continue;
                }
                placed[v] = true;
                cur.push(v);
                rec(p, placed, cur, out);
                cur.pop();
                placed[v] = false;
            }
        }
        let mut out = Vec::new();
        rec(self, &mut vec![false; self.n + 1], &mut Vec::with_capacity(self.n), &mut out);
        out
    }

    /// Lexicographically smallest linear extension: repeatedly take the
    /// smallest element all of whose predecessors are already placed.
    pub fn min_linear_extension(&self) -> Vec<usize> {
        let mut placed = vec![false; self.n + 1];
        let mut out = Vec::with_capacity(self.n);
        while out.len() < self.n {
            let v = (1..=self.n)
                .find(|&v| !placed[v] && (1..=self.n).all(|a| placed[a] || !self.lt(a, v)))
                .expect("a finite poset has a minimal element");
            placed[v] = true;
            out.push(v);
        }
        out
    }
}

/// Every acyclic orientation of `g`, sorted by bit string.
pub fn enumerate_acyclic(g: &DyckGraph) -> Vec<Orientation> {
    let m = g.edges().len();
    assert!(m < 64, "too many edges to enumerate orientations");
    let mut out: Vec<Orientation> = (0..1u64 << m)
        .filter_map(|mask| {
            // Edge 0 is the most significant bit, so numeric order is bit-string order.
            let up = (0..m).map(|k| mask >> (m - 1 - k) & 1 == 1).collect();
            Orientation::new(g, up).ok()
        })
        .collect();
    out.sort_by_key(Orientation::to_bits);
    out
}

pub fn linear_extensions(o: &Orientation) -> Vec<Vec<usize>> {
    o.poset().linear_extensions()
}

pub fn min_linear_extension(o: &Orientation) -> Vec<usize> {
    o.poset().min_linear_extension()
}

/// Orients each edge from the endpoint that appears first in `sigma`.
pub fn orientation_from_permutation(
    g: &DyckGraph,
    sigma: &[usize],
) -> Result<Orientation, OrientationError> {
    let n = g.n();
    let mut pos = vec![usize::MAX; n + 1];
    for (k, &v) in sigma.iter().enumerate() {
        if v == 0 || v > n || pos[v] != usize::MAX {
            return Err(OrientationError::NotPermutation(sigma.to_vec(), n));
        }
        pos[v] = k;
    }
    if sigma.len() != n {
        return Err(OrientationError::NotPermutation(sigma.to_vec(), n));
    }
    let up = g.edges().iter().map(|&(i, j)| pos[i] < pos[j]).collect();
    Ok(Orientation::new(g, up).expect("orientation induced by a permutation is acyclic"))
}

/// An acyclic orientation with its block of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationClass {
    pub orientation: Orientation,
    /// Sorted lexicographically; the first entry is the minimum.
    pub extensions: Vec<Vec<usize>>,
    pub minimum: Vec<usize>,
}

/// The partition of `S_n` into linear-extension classes, one per acyclic
/// orientation, in orientation bit-string order.
pub fn orientation_classes(g: &DyckGraph) -> Vec<OrientationClass> {
    enumerate_acyclic(g)
        .into_iter()
        .map(|o| {
            let extensions = linear_extensions(&o);
            let minimum = min_linear_extension(&o);
            OrientationClass { orientation: o, extensions, minimum }
        })
        .collect()
}

/// `Σ_o t^{asc(o)}` over acyclic orientations.
pub fn ascent_polynomial(g: &DyckGraph) -> Poly {
    enumerate_acyclic(g).iter().map(|o| Poly::monomial(1, o.asc_arcs())).sum()
}

/// `Σ_o t^{desc(o)}` over acyclic orientations.
pub fn descent_polynomial(g: &DyckGraph) -> Poly {
    enumerate_acyclic(g).iter().map(|o| Poly::monomial(1, o.desc_arcs())).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hessenberg::{enumerate_hessenberg, HessenbergFunction};
    use std::collections::BTreeSet;

    fn graph(s: &str) -> DyckGraph {
        s.parse::<HessenbergFunction>().unwrap().to_graph()
    }

    fn word(s: &str) -> Vec<usize> {
        s.chars().map(|c| c as usize - '0' as usize).collect()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n);
                out.push(q);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_acyclic(&graph("2444")).len(), 12);
        assert_eq!(enumerate_acyclic(&graph("233")).len(), 4);
        assert_eq!(enumerate_acyclic(&HessenbergFunction::full(4).to_graph()).len(), 24);
        assert_eq!(enumerate_acyclic(&HessenbergFunction::identity(3).to_graph()).len(), 1);
    }

    #[test]
    fn cyclic_rejected() {
        let k3 = HessenbergFunction::full(3).to_graph();
        // Edges (1,2),(1,3),(2,3): 1→2, 3→1, 2→3 is a cycle.
        assert_eq!(Orientation::from_bits(&k3, "101"), Err(OrientationError::Cyclic));
        assert!(matches!(
            Orientation::from_bits(&k3, "10"),
            Err(OrientationError::LengthMismatch { .. })
        ));
        assert_eq!(Orientation::from_bits(&k3, "1x1"), Err(OrientationError::BadBit('x')));
    }

    #[test]
    fn statistics() {
        let g = graph("2444");
        let all_up = Orientation::from_bits(&g, "1111").unwrap();
        assert_eq!((all_up.asc_arcs(), all_up.desc_arcs()), (4, 0));
        let all_down = Orientation::from_bits(&g, "0000").unwrap();
        assert_eq!((all_down.asc_arcs(), all_down.desc_arcs()), (0, 4));
        let o = orientation_from_permutation(&g, &word("1423")).unwrap();
        assert_eq!((o.asc_arcs(), o.desc_arcs()), (2, 2));
    }

    #[test]
    fn posets() {
        let g = graph("233");
        let chain = Orientation::from_bits(&g, "11").unwrap().poset();
        assert!(chain.lt(1, 2) && chain.lt(2, 3) && chain.lt(1, 3));
        assert_eq!(chain.linear_extensions(), vec![vec![1, 2, 3]]);
        // 2→1 and 2→3.
        let v = Orientation::from_bits(&g, "01").unwrap().poset();
        assert_eq!(v.minimal_elements(), vec![2]);
        assert!(!v.comparable(1, 3));
        let empty = HessenbergFunction::identity(3).to_graph();
        let anti = Orientation::new(&empty, vec![]).unwrap();
        assert_eq!(anti.poset().minimal_elements(), vec![1, 2, 3]);
        assert_eq!(min_linear_extension(&anti), vec![1, 2, 3]);
        assert_eq!(linear_extensions(&anti).len(), 6);
    }

    #[test]
    fn figure_classes() {
        let g = graph("2444");
        let from = |s: &str| orientation_from_permutation(&g, &word(s)).unwrap();
        let ext = |s: &str| -> Vec<String> {
            linear_extensions(&from(s))
                .iter()
                .map(|w| w.iter().map(ToString::to_string).collect())
                .collect()
        };
        assert_eq!(ext("1342"), vec!["1342", "3142", "3412"]);
        assert_eq!(ext("2143"), vec!["2143", "2413", "2431"]);
        assert_eq!(min_linear_extension(&from("4123")), word("1423"));
        assert_eq!(min_linear_extension(&from("2341")), word("2134"));
    }

    #[test]
    fn from_permutation() {
        let g = graph("2444");
        assert_eq!(orientation_from_permutation(&g, &word("1234")).unwrap().to_bits(), "1111");
        assert_eq!(orientation_from_permutation(&g, &word("4321")).unwrap().to_bits(), "0000");
        let o = orientation_from_permutation(&g, &word("1423")).unwrap();
        let arcs: Vec<_> = o.arcs().collect();
        assert_eq!(arcs, vec![(1, 2), (2, 3), (4, 2), (4, 3)]);
        assert!(orientation_from_permutation(&g, &word("1223")).is_err());
        assert!(orientation_from_permutation(&g, &word("123")).is_err());
    }

    #[test]
    fn classes_partition_s_n() {
        for n in 1..=5 {
            let all = permutations(n);
            for h in enumerate_hessenberg(n) {
                let g = h.to_graph();
                let mut seen = BTreeSet::new();
                for class in orientation_classes(&g) {
                    assert_eq!(class.extensions[0], class.minimum);
                    for w in &class.extensions {
                        assert!(seen.insert(w.clone()), "{w:?} in two classes for h = {h}");
                    }
                    let back = orientation_from_permutation(&g, &class.minimum).unwrap();
                    assert_eq!(back, class.orientation);
                }
                assert_eq!(seen.into_iter().collect::<Vec<_>>(), all);
            }
        }
    }

    #[test]
    fn adjacent_swaps() {
        // u i j v and u j i v share a class iff {i, j} is not an edge.
        for n in 2..=5 {
            for h in enumerate_hessenberg(n) {
                let g = h.to_graph();
                for w in permutations(n) {
                    let o = orientation_from_permutation(&g, &w).unwrap();
                    for k in 0..n - 1 {
                        let mut s = w.clone();
                        s.swap(k, k + 1);
                        let same = orientation_from_permutation(&g, &s).unwrap() == o;
                        assert_eq!(same, !g.has_edge(w[k], w[k + 1]));
                    }
                }
            }
        }
    }

    #[test]
    fn ascent_and_descent_polynomials_agree() {
        for n in 1..=5 {
            for h in enumerate_hessenberg(n) {
                let g = h.to_graph();
                let a = ascent_polynomial(&g);
                assert_eq!(a, descent_polynomial(&g));
                assert!(a.is_palindromic());
            }
        }
    }
}
