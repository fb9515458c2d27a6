//! Semistandard tableaux, the Lascoux–Schützenberger charge and cocharge
//! statistics, modified Kostka–Foulkes polynomials `K̃_λμ(q)` and the modified
//! Hall–Littlewood functions `Q̃'_μ = Σ_λ K̃_λμ(q) s_λ`.

use super::{Basis, SymF};
use crate::partition::{partitions, Partition};
use crate::poly::Poly;

/// A semistandard tableau in English convention: `rows[0]` is the longest row,
/// rows weakly increase, columns strictly increase. Letters start at 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub rows: Vec<Vec<usize>>,
}

/// All semistandard tableaux of shape `shape` and content `content`.
///
/// Letter `k` occupies a horizontal strip of size `content[k-1]`, so tableaux
/// are grown strip by strip.
pub fn semistandard_tableaux(shape: &Partition, content: &[usize]) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.weight() != content.iter().sum::<usize>() {
        return out;
    }
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    grow(shape, content, 0, &mut rows, &mut out);
    out
}

fn grow(
    shape: &Partition,
    content: &[usize],
    letter: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if letter == content.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    add_strip(shape, content, letter, 0, content[letter], rows, out);
}

/// Places `remaining` copies of `letter + 1` in rows `row..`, as a horizontal
/// strip: a row may not extend past the old length of the row above.
fn add_strip(
    shape: &Partition,
    content: &[usize],
    letter: usize,
    row: usize,
    remaining: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if remaining == 0 {
        grow(shape, content, letter + 1, rows, out);
        return;
    }
    if row == rows.len() {
        return;
    }
    let len = rows[row].len();
    let mut limit = shape.part(row);
    if row > 0 {
        // Cells of the row above that were filled before this letter.
        let above_old = rows[row - 1].iter().filter(|&&x| x <= letter).count();
        limit = limit.min(above_old);
    }
    let most = limit.saturating_sub(len).min(remaining);
    for take in (0..=most).rev() {
        rows[row].extend(std::iter::repeat_n(letter + 1, take));
        add_strip(shape, content, letter, row + 1, remaining - take, rows, out);
        rows[row].truncate(len);
    }
}

/// Reading word: rows from the shortest to the longest, each left to right.
pub fn reading_word(t: &Tableau) -> Vec<usize> {
    t.rows.iter().rev().flatten().copied().collect()
}

/// Splits a word with partition content into standard subwords and sums a
/// per-subword index. Starting from the right end, the cyclic leftward scan
/// picks letters 1, 2, 3, ...; `step_if_wrapped` selects whether the index
/// grows when the next letter is found only after wrapping around (charge) or
/// when it is found without wrapping (cocharge).
fn subword_statistic(word: &[usize], step_if_wrapped: bool) -> usize {
    let n = word.len();
    let mut taken = vec![false; n];
    let mut remaining = n;
    let mut total = 0;
    while remaining > 0 {
        let mut pos = n;
        let mut index = 0;
        let mut letter = 1;
        loop {
            // Cyclic leftward search from just left of `pos`.
            let mut wrapped = false;
            let mut found = None;
            let mut p = pos;
            for _ in 0..n {
                if p == 0 {
                    p = n;
                    wrapped = true;
                }
                p -= 1;
                if !taken[p] && word[p] == letter {
                    found = Some(p);
                    break;
                }
            }
            let Some(p) = found else { break };
            if letter > 1 && wrapped == step_if_wrapped {
                index += 1;
            }
            taken[p] = true;
            remaining -= 1;
            total += index;
            pos = p;
            letter += 1;
        }
        assert!(letter > 1, "word content is not a partition");
    }
    total
}

pub fn charge(word: &[usize]) -> usize {
    subword_statistic(word, true)
}

pub fn cocharge(word: &[usize]) -> usize {
    subword_statistic(word, false)
}

/// `K̃_λμ(q) = Σ_T q^{cocharge(T)}` over semistandard tableaux of shape `λ`
/// and content `μ`. Zero when no such tableau exists.
pub fn kostka_foulkes_modified(lambda: &Partition, mu: &Partition) -> Poly {
    semistandard_tableaux(lambda, mu.parts())
        .iter()
        .map(|t| Poly::monomial(1, cocharge(&reading_word(t))))
        .sum()
}

/// `Q̃'_μ` in the Schur basis.
pub fn modified_hall_littlewood(mu: &Partition) -> SymF {
    let n = mu.weight();
    SymF::from_terms(
        n,
        Basis::S,
        partitions(n).into_iter().map(|lam| {
            let c = kostka_foulkes_modified(&lam, mu);
            (lam, c)
        }),
    )
    .expect("partitions of n have weight n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::convert;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(semistandard_tableaux(&p("21"), &[1, 1, 1]).len(), 2);
        assert_eq!(semistandard_tableaux(&p("3"), &[2, 1]).len(), 1);
        assert_eq!(semistandard_tableaux(&p("111"), &[2, 1]).len(), 0);
        assert_eq!(semistandard_tableaux(&p("22"), &[2, 2]).len(), 1);
        assert_eq!(semistandard_tableaux(&p("21"), &[2]).len(), 0);
        let t = &semistandard_tableaux(&p("21"), &[2, 1])[0];
        assert_eq!(t.rows, vec![vec![1, 1], vec![2]]);
        assert_eq!(reading_word(t), vec![2, 1, 1]);
    }

    #[test]
    fn charge_of_standard_words() {
        assert_eq!(charge(&[1, 2, 3]), 3);
        assert_eq!(charge(&[3, 2, 1]), 0);
        assert_eq!(cocharge(&[1, 2, 3]), 0);
        assert_eq!(cocharge(&[3, 2, 1]), 3);
        // 2 1 1 2: subwords (2 at 0, 1 at 2) and (1 at 1, 2 at 3).
        assert_eq!(charge(&[2, 1, 1, 2]), 1);
        assert_eq!(cocharge(&[2, 1, 1, 2]), 1);
    }

    #[test]
    fn charge_plus_cocharge_is_n_mu() {
        for n in 1..=6 {
            for lam in partitions(n) {
                for mu in partitions(n) {
                    for t in semistandard_tableaux(&lam, mu.parts()) {
                        let w = reading_word(&t);
                        assert_eq!(charge(&w) + cocharge(&w), mu.n_statistic(), "{w:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(kostka_foulkes_modified(&p("3"), &p("21")), Poly::one());
        assert_eq!(kostka_foulkes_modified(&p("21"), &p("21")), poly(&[0, 1]));
        assert_eq!(kostka_foulkes_modified(&p("1"), &p("1")), Poly::one());
        assert_eq!(kostka_foulkes_modified(&p("21"), &p("111")), poly(&[0, 1, 1]));
        assert_eq!(kostka_foulkes_modified(&p("111"), &p("21")), Poly::zero());
        // K_{31,22}(q) = q has charge 1 and cocharge n(22) - 1 = 1.
        assert_eq!(kostka_foulkes_modified(&p("31"), &p("22")), poly(&[0, 1]));
        assert_eq!(kostka_foulkes_modified(&p("4"), &p("22")), Poly::one());
        assert_eq!(kostka_foulkes_modified(&p("22"), &p("22")), poly(&[0, 0, 1]));
    }

    #[test]
    fn one_row_is_h_n() {
        for n in 1..=8 {
            let q = modified_hall_littlewood(&Partition::row(n));
            assert_eq!(q, SymF::basis_element(Basis::S, Partition::row(n)));
            assert_eq!(convert(&q, Basis::H), SymF::basis_element(Basis::H, Partition::row(n)));
        }
    }

    #[test]
    fn two_one_in_monomials() {
        let m = convert(&modified_hall_littlewood(&p("21")), Basis::M);
        assert_eq!(m.coeff(&p("111")), poly(&[1, 2]));
        assert_eq!(m.coeff(&p("21")), poly(&[1, 1]));
        assert_eq!(m.coeff(&p("3")), Poly::one());
    }

    #[test]
    fn one_one_one_in_monomials() {
        // The m_21 and m_3 coefficients are [3]_q and 1; the m_111 coefficient
        // is [2]_q [3]_q rather than [3]_q.
        let m = convert(&modified_hall_littlewood(&p("111")), Basis::M);
        assert_eq!(m.coeff(&p("3")), Poly::one());
        assert_eq!(m.coeff(&p("21")), poly(&[1, 1, 1]));
        assert_eq!(m.coeff(&p("111")), poly(&[1, 2, 2, 1]));
        assert_ne!(m.coeff(&p("111")), poly(&[1, 1, 1]));
    }

    #[test]
    fn q_equals_one_gives_kostka_numbers() {
        for n in 1..=7 {
            for lam in partitions(n) {
                let s = convert(&SymF::basis_element(Basis::S, lam.clone()), Basis::M);
                for mu in partitions(n) {
                    let at_one = kostka_foulkes_modified(&lam, &mu).eval_u64(1);
                    assert_eq!(Poly::constant(at_one), s.coeff(&mu), "K[{lam}][{mu}]");
                }
            }
        }
    }

    #[test]
    fn column_content_gives_fake_degrees() {
        // K̃_{λ,1^n}(q) is the generating function of standard tableaux by
        // cocharge; at q=1 the total over λ weighted by f^λ is n!.
        let n = 5;
        let total: num_bigint::BigInt = partitions(n)
            .iter()
            .map(|lam| {
                let k = kostka_foulkes_modified(lam, &Partition::column(n)).eval_u64(1);
                &k * &k
            })
            .sum();
        assert_eq!(total, num_bigint::BigInt::from(120));
    }
}
