//! Tymoczko configurations for a Hessenberg function `h` and a nilpotent
//! Jordan type `μ`: admissible fillings of the Ferrers diagram of `μ`, their
//! `h`-inversion counts (cell dimensions), and the resulting Poincaré
//! polynomials.
//!
//! Diagrams use the French convention: row 0 is the bottom (longest) row and
//! rows are left-justified.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::hessenberg::HessenbergFunction;
use crate::partition::Partition;
use crate::poly::{t_integer, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TymoczkoError {
    #[error("shape ({shape}) has weight {weight}, but h is defined on [{n}]")]
    ShapeWeightMismatch { shape: Partition, weight: usize, n: usize },
    #[error("row lengths {0:?} do not form a partition")]
    BadShape(Vec<usize>),
    #[error("entries are not a bijection onto 1..={0}")]
    NotBijective(usize),
    #[error("cannot parse filling {0:?}")]
    Parse(String),
}

/// A bijective filling of a Ferrers diagram by `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Filling {
    /// `rows[0]` is the bottom row.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TymoczkoError> {
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape =
            Partition::new(lengths.clone()).map_err(|_| TymoczkoError::BadShape(lengths))?;
        let n = shape.weight();
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return Err(TymoczkoError::NotBijective(n));
            }
            seen[v] = true;
        }
        Ok(Filling { shape, rows })
    }

    /// Single-row filling from a word.
    pub fn row(word: &[usize]) -> Result<Self, TymoczkoError> {
        Filling::new(vec![word.to_vec()])
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Rows bottom to top, concatenated.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// `positions()[v] = (row, column)` of entry `v` (index 0 unused).
    fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); self.shape.weight() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                pos[v] = (r, c);
            }
        }
        pos
    }

    /// Every horizontal adjacency `x y` satisfies `x ≤ h(y)`.
    pub fn is_admissible(&self, h: &HessenbergFunction) -> bool {
        self.shape.weight() == h.n()
            && self
                .rows
                .iter()
                .all(|row| row.windows(2).all(|w| w[0] <= h.at(w[1])))
    }
}

impl fmt::Display for Filling {
    /// Rows bottom to top joined by `/`, entries space separated: `1 2/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join("/"))
    }
}

impl FromStr for Filling {
    type Err = TymoczkoError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows = s
            .split('/')
            .map(|r| {
                r.split_whitespace()
                    .map(|x| x.parse::<usize>().map_err(|_| TymoczkoError::Parse(s.to_string())))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Filling::new(rows)
    }
}

fn check_shape(h: &HessenbergFunction, mu: &Partition) -> Result<(), TymoczkoError> {
    if mu.weight() != h.n() {
        return Err(TymoczkoError::ShapeWeightMismatch {
            shape: mu.clone(),
            weight: mu.weight(),
            n: h.n(),
        });
    }
    Ok(())
}

/// All admissible fillings of shape `μ`, in lexicographic order of the
/// bottom-to-top reading word.
pub fn enumerate_fillings(
    h: &HessenbergFunction,
    mu: &Partition,
) -> Result<Vec<Filling>, TymoczkoError> {
    check_shape(h, mu)?;
    let n = h.n();
    let cells: Vec<(usize, usize)> = mu
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<usize>> = mu.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut used = vec![false; n + 1];
    let mut out = Vec::new();
    fill(h, mu, &cells, 0, &mut rows, &mut used, &mut out);
    Ok(out)
}

fn fill(
    h: &HessenbergFunction,
    mu: &Partition,
    cells: &[(usize, usize)],
    k: usize,
    rows: &mut Vec<Vec<usize>>,
    used: &mut Vec<bool>,
    out: &mut Vec<Filling>,
) {
    if k == cells.len() {
        out.push(Filling { shape: mu.clone(), rows: rows.clone() });
        return;
    }
    let (r, c) = cells[k];
    for v in 1..=h.n() {
        if used[v] || (c > 0 && rows[r][c - 1] > h.at(v)) {
            continue;
        }
        used[v] = true;
        rows[r].push(v);
        fill(h, mu, cells, k + 1, rows, used, out);
        rows[r].pop();
        used[v] = false;
    }
}

/// Number of pairs `a < b` such that `b` sits strictly higher in `a`'s column
/// or in a column strictly to the left of `a`, and, when `a` has a right
/// neighbor `c`, `b ≤ h(c)`.
pub fn h_inversions(f: &Filling, h: &HessenbergFunction) -> usize {
    let pos = f.positions();
    let n = f.shape.weight();
    let mut count = 0;
    for a in 1..=n {
        let (ra, ca) = pos[a];
        let bound = f.rows[ra].get(ca + 1).map_or(n, |&c| h.at(c));
        for b in a + 1..=bound.min(n) {
            let (rb, cb) = pos[b];
            if (cb == ca && rb > ra) || cb < ca {
                count += 1;
            }
        }
    }
    count
}

/// `d_μ(q) = Σ_fillings q^{h-inversions}`.
pub fn poincare_polynomial(h: &HessenbergFunction, mu: &Partition) -> Result<Poly, TymoczkoError> {
    Ok(enumerate_fillings(h, mu)?
        .iter()
        .map(|f| Poly::monomial(1, h_inversions(f, h)))
        .sum())
}

/// `Π_i [h(i) - i + 1]_t`.
pub fn poincare_product(h: &HessenbergFunction) -> Poly {
    (1..=h.n()).fold(Poly::one(), |acc, i| &acc * &t_integer(h.at(i) - i + 1))
}

/// Number of ways to insert `k` into an admissible word on `[k-1]`: at the
/// right end, or immediately left of any `i < k` with `k ≤ h(i)`.
pub fn insertion_count(h: &HessenbergFunction, k: usize) -> usize {
    1 + (1..k).filter(|&i| k <= h.at(i)).count()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    /// Admissible single-row filling of `[k]` at level `k`.
    pub word: Vec<usize>,
    /// Index of the parent in the previous level.
    pub parent: Option<usize>,
    /// Allowed insertion slots to the right of the one used, so 0 for the
    /// right end.
    pub rank_from_right: usize,
    pub inversions: usize,
}

/// Tree whose level `k` holds the admissible one-row fillings of `[k]`; the
/// children of a node are obtained by inserting `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationTree {
    pub levels: Vec<Vec<TreeNode>>,
}

impl GenerationTree {
    /// Level `k` (1-based).
    pub fn level(&self, k: usize) -> &[TreeNode] {
        &self.levels[k - 1]
    }

    pub fn leaves(&self) -> &[TreeNode] {
        self.levels.last().map_or(&[], Vec::as_slice)
    }

    /// Children of node `idx` at level `k`, left to right by insertion slot.
    pub fn children(&self, k: usize, idx: usize) -> Vec<&TreeNode> {
        self.levels
            .get(k)
            .map(|next| next.iter().filter(|c| c.parent == Some(idx)).collect())
            .unwrap_or_default()
    }
}

pub fn generation_tree(h: &HessenbergFunction) -> GenerationTree {
    let n = h.n();
    let root = TreeNode { word: vec![1], parent: None, rank_from_right: 0, inversions: 0 };
    let mut levels = vec![vec![root]];
    for k in 2..=n {
        let mut next = Vec::new();
        for (idx, node) in levels[k - 2].iter().enumerate() {
            let slots: Vec<usize> = (0..node.word.len())
                .filter(|&p| k <= h.at(node.word[p]))
                .chain(std::iter::once(node.word.len()))
                .collect();
            let total = slots.len();
            for (s, &p) in slots.iter().enumerate() {
                let mut word = node.word.clone();
                word.insert(p, k);
                let inversions = h_inversions_prefix(&word, h);
                next.push(TreeNode {
                    word,
                    parent: Some(idx),
                    rank_from_right: total - 1 - s,
                    inversions,
                });
            }
        }
        levels.push(next);
    }
    GenerationTree { levels }
}

/// `h`-inversions of a one-row word on `[k]`, with `h` restricted to `[k]`.
fn h_inversions_prefix(word: &[usize], h: &HessenbergFunction) -> usize {
    let k = word.len();
    let mut pos = vec![0; k + 1];
    for (i, &v) in word.iter().enumerate() {
        pos[v] = i;
    }
    (1..=k)
        .map(|a| {
            let bound = word.get(pos[a] + 1).map_or(k, |&c| h.at(c).min(k));
            (a + 1..=bound).filter(|&b| pos[b] < pos[a]).count()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hessenberg::enumerate_hessenberg;
    use crate::partition::partitions;

    fn h(s: &str) -> HessenbergFunction {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    fn table(hf: &HessenbergFunction, mu: &str) -> Vec<(String, usize)> {
        enumerate_fillings(hf, &p(mu))
            .unwrap()
            .iter()
            .map(|f| (f.to_string(), h_inversions(f, hf)))
            .collect()
    }

    #[test]
    fn one_row_233() {
        let t = table(&h("233"), "3");
        let expected = [("1 2 3", 0), ("1 3 2", 1), ("2 1 3", 1), ("3 2 1", 2)];
        assert_eq!(t, expected.map(|(s, d)| (s.to_string(), d)));
    }

    #[test]
    fn hook_233() {
        let t = table(&h("233"), "21");
        let expected =
            [("1 2/3", 2), ("1 3/2", 1), ("2 1/3", 2), ("2 3/1", 0), ("3 2/1", 1)];
        assert_eq!(t, expected.map(|(s, d)| (s.to_string(), d)));
    }

    #[test]
    fn column_233() {
        let t = table(&h("233"), "111");
        let expected = [("1/2/3", 3), ("1/3/2", 2), ("2/1/3", 2), ("2/3/1", 1), ("3/1/2", 1), ("3/2/1", 0)];
        assert_eq!(t, expected.map(|(s, d)| (s.to_string(), d)));
    }

    #[test]
    fn poincare_233() {
        assert_eq!(poincare_polynomial(&h("233"), &p("3")).unwrap(), poly(&[1, 2, 1]));
        assert_eq!(poincare_polynomial(&h("233"), &p("21")).unwrap(), poly(&[1, 2, 2]));
        assert_eq!(poincare_polynomial(&h("233"), &p("111")).unwrap(), poly(&[1, 2, 2, 1]));
        assert!(matches!(
            poincare_polynomial(&h("233"), &p("2")),
            Err(TymoczkoError::ShapeWeightMismatch { .. })
        ));
    }

    #[test]
    fn products() {
        assert_eq!(poincare_product(&h("233")), poly(&[1, 2, 1]));
        assert_eq!(poincare_product(&h("2444")), poly(&[1, 3, 4, 3, 1]));
        assert_eq!(poincare_product(&HessenbergFunction::identity(5)), Poly::one());
    }

    #[test]
    fn identity_word_has_no_inversions() {
        for n in 1..=6 {
            let w: Vec<usize> = (1..=n).collect();
            for hf in enumerate_hessenberg(n) {
                assert_eq!(h_inversions(&Filling::row(&w).unwrap(), &hf), 0);
            }
        }
    }

    #[test]
    fn product_formula_for_one_row() {
        for n in 1..=6 {
            for hf in enumerate_hessenberg(n) {
                let direct = poincare_polynomial(&hf, &Partition::row(n)).unwrap();
                let product = poincare_product(&hf);
                assert_eq!(direct, product, "h = {hf}");
                assert!(product.is_palindromic());
                assert_eq!(product.degree(), Some(hf.edge_count()));
            }
        }
    }

    #[test]
    fn column_shape_counts_all_permutations() {
        for n in 1..=5 {
            for hf in enumerate_hessenberg(n) {
                let d = poincare_polynomial(&hf, &Partition::column(n)).unwrap();
                assert_eq!(d, crate::poly::t_factorial(n));
            }
        }
    }

    #[test]
    fn fillings_are_admissible_and_sorted() {
        for hf in enumerate_hessenberg(4) {
            for mu in partitions(4) {
                let fs = enumerate_fillings(&hf, &mu).unwrap();
                assert!(fs.iter().all(|f| f.is_admissible(&hf) && f.shape() == &mu));
                assert!(fs.windows(2).all(|w| w[0].reading_word() < w[1].reading_word()));
            }
        }
    }

    #[test]
    fn filling_parse_and_validate() {
        let f: Filling = "1 2/3".parse().unwrap();
        assert_eq!(f.rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(f.to_string(), "1 2/3");
        assert!(matches!("1/2 3".parse::<Filling>(), Err(TymoczkoError::BadShape(_))));
        assert!(matches!("1 1/3".parse::<Filling>(), Err(TymoczkoError::NotBijective(3))));
        assert!(matches!("1 x".parse::<Filling>(), Err(TymoczkoError::Parse(_))));
    }

    #[test]
    fn figure_tree_2444() {
        let t = generation_tree(&h("2444"));
        let words = |nodes: Vec<&TreeNode>| -> Vec<Vec<usize>> {
            nodes.into_iter().map(|n| n.word.clone()).collect()
        };
        assert_eq!(t.level(1).len(), 1);
        assert_eq!(t.level(1)[0].word, vec![1]);
        let idx21 = t.level(2).iter().position(|n| n.word == vec![2, 1]).unwrap();
        assert_eq!(words(t.children(2, idx21)), vec![vec![3, 2, 1], vec![2, 1, 3]]);
        let idx321 = t.level(3).iter().position(|n| n.word == vec![3, 2, 1]).unwrap();
        assert_eq!(
            words(t.children(3, idx321)),
            vec![vec![4, 3, 2, 1], vec![3, 4, 2, 1], vec![3, 2, 1, 4]]
        );
        assert_eq!(t.leaves().len(), 12);
    }

    #[test]
    fn tree_structure() {
        for n in 1..=6 {
            for hf in enumerate_hessenberg(n) {
                let t = generation_tree(&hf);
                for k in 1..n {
                    for idx in 0..t.level(k).len() {
                        let kids = t.children(k, idx);
                        assert_eq!(kids.len(), insertion_count(&hf, k + 1));
                        let parent = &t.level(k)[idx];
                        let mut increments: Vec<usize> = kids
                            .iter()
                            .map(|c| {
                                assert_eq!(c.inversions, parent.inversions + c.rank_from_right);
                                c.rank_from_right
                            })
                            .collect();
                        increments.sort_unstable();
                        assert_eq!(increments, (0..kids.len()).collect::<Vec<_>>());
                    }
                }
                let mut leaves: Vec<Vec<usize>> = t.leaves().iter().map(|l| l.word.clone()).collect();
                leaves.sort();
                let fillings: Vec<Vec<usize>> = enumerate_fillings(&hf, &Partition::row(n))
                    .unwrap()
                    .iter()
                    .map(Filling::reading_word)
                    .collect();
                assert_eq!(leaves, fillings);
                for leaf in t.leaves() {
                    assert_eq!(leaf.inversions, h_inversions(&Filling::row(&leaf.word).unwrap(), &hf));
                }
            }
        }
    }

    #[test]
    fn insertion_count_multiset() {
        for n in 1..=8 {
            for hf in enumerate_hessenberg(n) {
                let mut a: Vec<usize> = (1..=n).map(|k| insertion_count(&hf, k)).collect();
                let mut b: Vec<usize> = (1..=n).map(|i| hf.at(i) - i + 1).collect();
                a.sort_unstable();
                b.sort_unstable();
                assert_eq!(a, b, "h = {hf}");
            }
        }
        // Pointwise the two lists differ: for 2444 the insertion counts are
        // 1,2,2,3 while h(k) - k + 1 is 2,3,2,1.
        let hf = h("2444");
        assert_eq!((1..=4).map(|k| insertion_count(&hf, k)).collect::<Vec<_>>(), vec![1, 2, 2, 3]);
    }
}
