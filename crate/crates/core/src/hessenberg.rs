//! Hessenberg functions `h: [n] → [n]` (weakly increasing, `h(i) ≥ i`) and the
//! objects they are in bijection with: Dyck graphs, Dyck words, partitions
//! inside the staircase, and 312-avoiding permutations.
//!
//! Vertices and positions are 1-indexed throughout, matching the usual
//! conventions for these objects.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HessenbergError {
    #[error("Hessenberg function must have at least one value")]
    Empty,
    #[error("h({i}) = {value} is outside [1, {n}]")]
    OutOfRange { i: usize, value: usize, n: usize },
    #[error("h is not weakly increasing: h({i}) = {left} > h({}) = {right}", i + 1)]
    NotWeaklyIncreasing { i: usize, left: usize, right: usize },
    #[error("h({i}) = {value} lies below the diagonal")]
    BelowDiagonal { i: usize, value: usize },
    #[error("malformed Dyck word {word:?}: {reason}")]
    MalformedWord { word: String, reason: String },
    #[error("cannot parse Hessenberg function {0:?}")]
    Parse(String),
    #[error("edge set is not interval closed: ({i},{j}) present but ({a},{b}) missing")]
    NotIntervalClosed { i: usize, j: usize, a: usize, b: usize },
    #[error("invalid edge ({0},{1}) on {2} vertices")]
    InvalidEdge(usize, usize, usize),
}

/// A validated Hessenberg function of type a).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    pub fn new(values: Vec<usize>) -> Result<Self, HessenbergError> {
        let n = values.len();
        if n == 0 {
            return Err(HessenbergError::Empty);
        }
        for (idx, &v) in values.iter().enumerate() {
            if v < 1 || v > n {
                return Err(HessenbergError::OutOfRange { i: idx + 1, value: v, n });
            }
        }
        for (idx, w) in values.windows(2).enumerate() {
            if w[0] > w[1] {
                return Err(HessenbergError::NotWeaklyIncreasing {
                    i: idx + 1,
                    left: w[0],
                    right: w[1],
                });
            }
        }
        for (idx, &v) in values.iter().enumerate() {
            if v < idx + 1 {
                return Err(HessenbergError::BelowDiagonal { i: idx + 1, value: v });
            }
        }
        Ok(HessenbergFunction { values })
    }

    /// `h(i) = i`: the graph without edges.
    pub fn identity(n: usize) -> Self {
        HessenbergFunction { values: (1..=n).collect() }
    }

    /// `h(i) = n`: the complete graph.
    pub fn full(n: usize) -> Self {
        HessenbergFunction { values: vec![n; n] }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `h(i)` for `1 ≤ i ≤ n`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// The code `c_i = h(i) - i`, i.e. the number of edges `(i, j)` with `j > i`.
    pub fn code(&self) -> Vec<usize> {
        self.values.iter().enumerate().map(|(idx, &v)| v - (idx + 1)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.code().iter().sum()
    }

    pub fn to_graph(&self) -> DyckGraph {
        let edges = (1..=self.n())
            .flat_map(|i| (i + 1..=self.at(i)).map(move |j| (i, j)))
            .collect();
        DyckGraph { n: self.n(), edges }
    }

    /// The region of the `n × n` square cut off by `h`: column `j` holds
    /// `n - h(j)` cells, so row `i` has `#{j : h(j) ≤ n - i}` cells. For
    /// `h = 23555` this is `(2,2,1)`.
    pub fn to_partition(&self) -> StaircasePartition {
        let n = self.n();
        let parts = (1..n)
            .map(|i| self.values.iter().filter(|&&v| v + i <= n).count())
            .take_while(|&p| p > 0)
            .collect();
        StaircasePartition { n, parts }
    }

    /// The permutation (one-line notation) whose Lehmer code is `h(i) - i`.
    pub fn to_permutation(&self) -> Vec<usize> {
        let mut unused: Vec<usize> = (1..=self.n()).collect();
        let w: Vec<usize> = self.code().into_iter().map(|c| unused.remove(c)).collect();
        assert!(avoids_312(&w), "decoded permutation {w:?} contains 312");
        w
    }

    /// N/E word: for each `i`, one `N` followed by `h(i) - h(i-1)` letters `E`.
    pub fn to_dyck_word(&self) -> String {
        let mut word = String::with_capacity(2 * self.n());
        let mut prev = 0;
        for &v in &self.values {
            word.push('N');
            word.extend(std::iter::repeat_n('E', v - prev));
            prev = v;
        }
        word
    }

    pub fn from_dyck_word(word: &str) -> Result<Self, HessenbergError> {
        let malformed = |reason: &str| HessenbergError::MalformedWord {
            word: word.to_string(),
            reason: reason.to_string(),
        };
        if !word.starts_with('N') {
            return Err(malformed("must start with N"));
        }
        let mut values = Vec::new();
        let mut east = 0;
        for ch in word.chars() {
            match ch {
                'N' => values.push(0),
                'E' => east += 1,
                _ => return Err(malformed("letters must be N or E")),
            }
            *values.last_mut().expect("word starts with N") = east;
        }
        let n = values.len();
        if east != n {
            return Err(malformed("unbalanced number of N and E"));
        }
        if let Some(i) = (1..=n).find(|&i| values[i - 1] < i) {
            return Err(malformed(&format!("path crosses the diagonal at step {i}")));
        }
        HessenbergFunction::new(values)
    }
}

/// All Hessenberg functions on `[n]`, lexicographic in their value lists.
pub fn enumerate_hessenberg(n: usize) -> Vec<HessenbergFunction> {
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
        let i = cur.len() + 1;
        if i > n {
            out.push(HessenbergFunction { values: cur.clone() });
            return;
        }
        let lo = i.max(cur.last().copied().unwrap_or(0));
        for v in lo..=n {
            cur.push(v);
            rec(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// True when no `i < j < k` has `w(j) < w(k) < w(i)`.
pub fn avoids_312(w: &[usize]) -> bool {
    let n = w.len();
    for i in 0..n {
        for j in i + 1..n {
            if w[j] >= w[i] {
                continue;
            }
            if w[j + 1..].iter().any(|&x| w[j] < x && x < w[i]) {
                return false;
            }
        }
    }
    true
}

impl fmt::Display for HessenbergFunction {
    /// Digit string when `n ≤ 9`, comma list otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.values.iter().map(ToString::to_string).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

impl FromStr for HessenbergFunction {
    type Err = HessenbergError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let values: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|p| p.trim().parse().ok()).collect()
        } else if !s.is_empty() && s.chars().all(|c| c.is_ascii_digit()) {
            Some(s.chars().map(|c| c as usize - '0' as usize).collect())
        } else {
            None
        };
        HessenbergFunction::new(values.ok_or_else(|| HessenbergError::Parse(s.to_string()))?)
    }
}

/// An interval-closed graph on `[n]`. Edges are stored as `(i, j)` with
/// `i < j`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyckGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl DyckGraph {
    /// Validates that the edge set is interval closed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, HessenbergError> {
        let mut norm = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            let (i, j) = (a.min(b), a.max(b));
            if i == j || i < 1 || j > n {
                return Err(HessenbergError::InvalidEdge(a, b, n));
            }
            norm.push((i, j));
        }
        norm.sort_unstable();
        norm.dedup();
        for &(i, j) in &norm {
            for a in i..j {
                for b in a + 1..=j {
                    if norm.binary_search(&(a, b)).is_err() {
                        return Err(HessenbergError::NotIntervalClosed { i, j, a, b });
                    }
                }
            }
        }
        Ok(DyckGraph { n, edges: norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// `h(i) = max(i, max{j : (i,j) ∈ E})`.
    pub fn to_hessenberg(&self) -> HessenbergFunction {
        let mut values: Vec<usize> = (1..=self.n).collect();
        for &(i, j) in &self.edges {
            values[i - 1] = values[i - 1].max(j);
        }
        HessenbergFunction::new(values).expect("interval-closed graph yields a Hessenberg function")
    }
}

/// Complement of a Hessenberg function in the square, as a partition with
/// trailing zeros trimmed. Fits inside the staircase `(n-1, ..., 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StaircasePartition {
    n: usize,
    parts: Vec<usize>,
}

impl StaircasePartition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Column lengths of the complement give `n - h(j)`.
    pub fn to_hessenberg(&self) -> HessenbergFunction {
        let values = (1..=self.n)
            .map(|j| self.n - self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        HessenbergFunction::new(values).expect("staircase partition yields a Hessenberg function")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn h(s: &str) -> HessenbergFunction {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!(HessenbergFunction::new(vec![2, 3, 3]).is_ok());
        assert!(HessenbergFunction::new(vec![1, 2, 3]).is_ok());
        assert!(matches!(
            HessenbergFunction::new(vec![1, 2, 2]),
            Err(HessenbergError::BelowDiagonal { i: 3, value: 2 })
        ));
        assert!(matches!(
            HessenbergFunction::new(vec![3, 2, 3]),
            Err(HessenbergError::NotWeaklyIncreasing { i: 1, .. })
        ));
        assert!(matches!(
            HessenbergFunction::new(vec![2, 4, 3]),
            Err(HessenbergError::OutOfRange { i: 2, value: 4, n: 3 })
        ));
        assert!(matches!(
            HessenbergFunction::new(vec![0, 2]),
            Err(HessenbergError::OutOfRange { i: 1, .. })
        ));
        assert_eq!(HessenbergFunction::new(vec![]), Err(HessenbergError::Empty));
    }

    #[test]
    fn graph_of_23555() {
        let g = h("23555").to_graph();
        assert_eq!(g.edges(), &[(1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]);
        assert_eq!(h("2444").to_graph().edges(), &[(1, 2), (2, 3), (2, 4), (3, 4)]);
        assert!(HessenbergFunction::identity(5).to_graph().edges().is_empty());
    }

    #[test]
    fn partition_encoding() {
        assert_eq!(h("23555").to_partition().parts(), &[2, 2, 1]);
        assert_eq!(h("233").to_partition().parts(), &[1]);
        assert!(HessenbergFunction::full(4).to_partition().parts().is_empty());
        assert_eq!(HessenbergFunction::identity(4).to_partition().parts(), &[3, 2, 1]);
        // Column lengths are n - h(j).
        assert_eq!(h("1244").to_partition().parts(), &[2, 2, 1]);
    }

    #[test]
    fn permutation_encoding() {
        assert_eq!(h("23555").code(), vec![1, 1, 2, 1, 0]);
        assert_eq!(h("23555").to_permutation(), vec![2, 3, 5, 4, 1]);
        assert_eq!(HessenbergFunction::identity(4).to_permutation(), vec![1, 2, 3, 4]);
        assert_eq!(h("233").to_permutation(), vec![2, 3, 1]);
    }

    #[test]
    fn permutation_matches_brute_force_code() {
        // Decode by searching S_n for the permutation with the requested code.
        fn lehmer(w: &[usize]) -> Vec<usize> {
            (0..w.len())
                .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
                .collect()
        }
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n);
                    out.push(q);
                }
            }
            out
        }
        for n in 1..=5 {
            let all = perms(n);
            for hf in enumerate_hessenberg(n) {
                let expected = all.iter().find(|w| lehmer(w) == hf.code()).unwrap();
                assert_eq!(&hf.to_permutation(), expected);
            }
        }
    }

    #[test]
    fn permutations_injective_and_312_avoiding() {
        for n in 1..=7 {
            let mut ws: Vec<Vec<usize>> =
                enumerate_hessenberg(n).iter().map(|h| h.to_permutation()).collect();
            assert!(ws.iter().all(|w| avoids_312(w)));
            let before = ws.len();
            ws.sort();
            ws.dedup();
            assert_eq!(ws.len(), before);
        }
        assert!(!avoids_312(&[3, 1, 2]));
        assert!(avoids_312(&[2, 3, 1]));
    }

    #[test]
    fn dyck_words() {
        assert_eq!(h("233").to_dyck_word(), "NEENEN");
        assert_eq!(HessenbergFunction::identity(3).to_dyck_word(), "NENENE");
        assert_eq!(HessenbergFunction::full(3).to_dyck_word(), "NEEENN");
        assert_eq!(HessenbergFunction::from_dyck_word("NEENEN").unwrap(), h("233"));
        for bad in ["", "ENNE", "NENEE", "NNEE", "NXNE", "NNEEEN"] {
            assert!(
                matches!(
                    HessenbergFunction::from_dyck_word(bad),
                    Err(HessenbergError::MalformedWord { .. })
                ),
                "{bad}"
            );
        }
    }

    #[test]
    fn dyck_word_round_trip() {
        for n in 1..=8 {
            for hf in enumerate_hessenberg(n) {
                let w = hf.to_dyck_word();
                assert_eq!(w.len(), 2 * n);
                assert_eq!(HessenbergFunction::from_dyck_word(&w).unwrap(), hf);
            }
        }
    }

    #[test]
    fn enumeration() {
        let names: Vec<String> = enumerate_hessenberg(3).iter().map(ToString::to_string).collect();
        assert_eq!(names, vec!["123", "133", "223", "233", "333"]);
        assert_eq!(enumerate_hessenberg(1), vec![h("1")]);
        let catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for n in 1..=10 {
            assert_eq!(enumerate_hessenberg(n).len(), catalan[n]);
        }
    }

    #[test]
    fn graph_round_trip_and_closure() {
        for n in 1..=6 {
            for hf in enumerate_hessenberg(n) {
                let g = hf.to_graph();
                assert_eq!(g.edges().len(), hf.edge_count());
                let rebuilt = DyckGraph::from_edges(n, g.edges()).unwrap();
                assert_eq!(rebuilt.to_hessenberg(), hf);
                assert_eq!(hf.to_partition().to_hessenberg(), hf);
            }
        }
        assert!(matches!(
            DyckGraph::from_edges(3, &[(1, 3)]),
            Err(HessenbergError::NotIntervalClosed { .. })
        ));
    }

    #[test]
    fn text_forms() {
        assert_eq!(h("2,3,5,5,5"), h("23555"));
        let long = HessenbergFunction::full(10);
        assert_eq!(long.to_string(), "10,10,10,10,10,10,10,10,10,10");
        assert_eq!(long.to_string().parse::<HessenbergFunction>().unwrap(), long);
        assert!("2a3".parse::<HessenbergFunction>().is_err());
    }

    proptest! {
        #[test]
        fn staircase_fit(idx in 0usize..429) {
            let all = enumerate_hessenberg(7);
            let hf = &all[idx % all.len()];
            let mu = hf.to_partition();
            for (i, &p) in mu.parts().iter().enumerate() {
                prop_assert!(p <= 7 - (i + 1));
            }
            prop_assert!(mu.parts().windows(2).all(|w| w[0] >= w[1]));
        }
    }
}
