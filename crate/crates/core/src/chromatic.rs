//! Chromatic quasisymmetric functions
//! `X_G(t) = Σ_{c ∈ PC(G)} t^{asc_G(c)} M_{ev(c)}`, summed over proper packed
//! colorings.
//!
//! Arbitrary simple graphs are accepted so that the symmetry test has
//! non-Dyck inputs to fail on.

use thiserror::Error;

use crate::hessenberg::DyckGraph;
use crate::partition::Partition;
use crate::poly::Poly;
use crate::symfunc::{self, Basis, QSymF, SymF, SymFuncError, Symmetry};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChromaticError {
    #[error("coloring is not proper: vertices {0} and {1} are adjacent and share a color")]
    ImproperColoring(usize, usize),
    #[error("coloring has {got} entries, graph has {expected} vertices")]
    LengthMismatch { got: usize, expected: usize },
    #[error("invalid edge ({0},{1}) on {2} vertices")]
    InvalidEdge(usize, usize, usize),
    #[error(transparent)]
    SymFunc(#[from] SymFuncError),
}

/// A simple graph on `[n]`, edges stored as sorted `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, ChromaticError> {
        let mut norm = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b || a < 1 || b < 1 || a > n || b > n {
                return Err(ChromaticError::InvalidEdge(a, b, n));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        norm.dedup();
        Ok(Graph { n, edges: norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `neighbors_below[v]` lists the neighbors `u < v` (both 1-indexed).
    fn lower_neighbors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n + 1];
        for &(i, j) in &self.edges {
            out[j].push(i);
        }
        out
    }
}

impl From<&DyckGraph> for Graph {
    fn from(g: &DyckGraph) -> Self {
        Graph { n: g.n(), edges: g.edges().to_vec() }
    }
}

/// Number of edges `(i, j)`, `i < j`, with `c_i < c_j`.
pub fn ascents(g: &Graph, colors: &[usize]) -> Result<usize, ChromaticError> {
    if colors.len() != g.n {
        return Err(ChromaticError::LengthMismatch { got: colors.len(), expected: g.n });
    }
    let mut asc = 0;
    for &(i, j) in &g.edges {
        let (ci, cj) = (colors[i - 1], colors[j - 1]);
        if ci == cj {
            return Err(ChromaticError::ImproperColoring(i, j));
        }
        asc += usize::from(ci < cj);
    }
    Ok(asc)
}

/// Content of a coloring: `(#{c_i = 1}, ..., #{c_i = r})`, in color order.
pub fn evaluation(colors: &[usize]) -> Vec<usize> {
    let r = colors.iter().copied().max().unwrap_or(0);
    let mut ev = vec![0; r];
    for &c in colors {
        ev[c - 1] += 1;
    }
    ev
}

/// Calls `f(colors, ascents)` for every proper packed coloring whose first
/// vertex has color `first` (all of them when `first` is `None`).
pub fn for_each_packed_coloring(
    g: &Graph,
    first: Option<usize>,
    f: &mut dyn FnMut(&[usize], usize),
) {
    struct Search<'a> {
        n: usize,
        lower: Vec<Vec<usize>>,
        colors: Vec<usize>,
        used: Vec<usize>,
        f: &'a mut dyn FnMut(&[usize], usize),
    }
    impl Search<'_> {
        /// Colors vertex `v` (1-indexed); `distinct` colors are in use with
        /// maximum `max`.
        fn go(&mut self, v: usize, distinct: usize, max: usize, asc: usize, only: Option<usize>) {
            if v > self.n {
                if distinct == max {
                    (self.f)(&self.colors, asc);
                }
                return;
            }
            let remaining = self.n - v + 1;
            let choices: Vec<usize> = match only {
                Some(c) => vec![c],
                None => (1..=self.n).collect(),
            };
            'color: for c in choices {
                let mut gained = 0;
                for &u in &self.lower[v] {
                    let cu = self.colors[u - 1];
                    if cu == c {
                        continue 'color;
                    }
                    gained += usize::from(cu < c);
                }
                let fresh = self.used[c] == 0;
                let (d, m) = (distinct + usize::from(fresh), max.max(c));
                // Every gap below the maximum still needs its own vertex.
                if m - d > remaining - 1 {
                    continue;
                }
                self.used[c] += 1;
                self.colors[v - 1] = c;
                self.go(v + 1, d, m, asc + gained, None);
                self.used[c] -= 1;
            }
            self.colors[v - 1] = 0;
        }
    }
    if g.n == 0 {
        f(&[], 0);
        return;
    }
    let mut s = Search {
        n: g.n,
        lower: g.lower_neighbors(),
        colors: vec![0; g.n],
        used: vec![0; g.n + 1],
        f,
    };
    s.go(1, 0, 0, 0, first);
}

/// `X_G(t)` in the monomial quasisymmetric basis.
///
/// The enumeration is sharded by the color of vertex 1 and the shards are
/// merged by coefficient addition.
pub fn chromatic_qsym(g: &Graph) -> QSymF {
    let mut total = QSymF::zero(g.n);
    for first in 1..=g.n.max(1) {
        let shard = chromatic_shard(g, first);
        total.merge(&shard).expect("shards share the degree");
    }
    total
}

fn chromatic_shard(g: &Graph, first: usize) -> QSymF {
    let mut shard = QSymF::zero(g.n);
    for_each_packed_coloring(g, (g.n > 0).then_some(first), &mut |colors, asc| {
        shard
            .add_term(evaluation(colors), &Poly::monomial(1, asc))
            .expect("evaluation of a packed coloring is a composition of n");
    });
    shard
}

pub fn is_symmetric(f: &QSymF) -> Symmetry {
    f.symmetry()
}

/// `X_G(t)` as a symmetric function in the monomial basis.
pub fn chromatic_sym(g: &Graph) -> Result<SymF, ChromaticError> {
    Ok(symfunc::qsym_to_sym(&chromatic_qsym(g))?)
}

/// Coefficients `c_λ(t)` of `X_G(t) = Σ c_λ(t) e_λ`.
pub fn e_expansion(g: &Graph) -> Result<SymF, ChromaticError> {
    Ok(symfunc::convert(&chromatic_sym(g)?, Basis::E))
}

/// `Σ_λ c_λ(t)`, the sum of the `e`-coefficients.
pub fn e_coefficient_sum(g: &Graph) -> Result<Poly, ChromaticError> {
    Ok(e_expansion(g)?.coefficient_sum())
}

/// The same sum computed as `⟨ω X_G(t), h_n⟩`.
pub fn e_coefficient_sum_via_hall(g: &Graph) -> Result<Poly, ChromaticError> {
    let x = chromatic_sym(g)?;
    let hn = SymF::basis_element(Basis::H, Partition::row(g.n));
    Ok(symfunc::hall_scalar(&symfunc::omega(&x), &hn)?)
}
