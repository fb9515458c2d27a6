//! Per-degree integer transition matrices between the monomial basis and the
//! elementary, complete homogeneous and Schur bases.
//!
//! The matrices are built by direct counting rather than by any recursive
//! symmetric-function identity:
//!
//! * `e_λ = Σ_ν A_{λν} m_ν` where `A_{λν}` counts 0/1 matrices with row sums
//!   `λ` and column sums `ν`;
//! * `h_λ = Σ_ν B_{λν} m_ν` where `B_{λν}` counts nonnegative integer
//!   matrices with the same margins;
//! * `s_λ` is expanded in `h` by the Jacobi–Trudi determinant and then pushed
//!   through `B`.
//!
//! Inverses are computed by exact rational Gauss–Jordan elimination; every
//! inverse is checked to be integral.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Basis;
use crate::partition::{partitions, Partition};

pub(crate) type Matrix = Vec<Vec<BigInt>>;

#[derive(Debug)]
pub(crate) struct Transitions {
    pub partitions: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// Row `λ` holds the monomial expansion of `e_λ`, `h_λ`, `s_λ`.
    to_m: [Matrix; 3],
    /// Row `ν` holds the expansion of `m_ν` in `e`, `h`, `s`.
    from_m: [Matrix; 3],
    /// Row `λ` holds the expansion of `s_λ` in `h`.
    pub s_to_h: Matrix,
}

impl Transitions {
    fn slot(basis: Basis) -> Option<usize> {
        match basis {
            Basis::M => None,
            Basis::E => Some(0),
            Basis::H => Some(1),
            Basis::S => Some(2),
        }
    }

    /// Expansion of the basis elements of `basis` in `m`; `None` for `m` itself.
    pub fn to_monomial(&self, basis: Basis) -> Option<&Matrix> {
        Self::slot(basis).map(|k| &self.to_m[k])
    }

    pub fn from_monomial(&self, basis: Basis) -> Option<&Matrix> {
        Self::slot(basis).map(|k| &self.from_m[k])
    }

    fn build(degree: usize) -> Self {
        let parts = partitions(degree);
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let e_to_m = margin_matrix(&parts, true);
        let h_to_m = margin_matrix(&parts, false);
        let s_to_h = jacobi_trudi(&parts, &index);
        let s_to_m = mat_mul(&s_to_h, &h_to_m);
        let from_m = [invert(&e_to_m), invert(&h_to_m), invert(&s_to_m)];
        Transitions {
            partitions: parts,
            index,
            to_m: [e_to_m, h_to_m, s_to_m],
            from_m,
            s_to_h,
        }
    }
}

/// Initialize-once, read-many cache of transition data keyed by degree.
pub(crate) fn transitions(degree: usize) -> Arc<Transitions> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Transitions>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("transition cache poisoned").get(&degree) {
        return Arc::clone(t);
    }
    // Built outside the lock; a racing builder produces identical data and the
    // first insert wins.
    let built = Arc::new(Transitions::build(degree));
    let mut guard = cache.lock().expect("transition cache poisoned");
    Arc::clone(guard.entry(degree).or_insert(built))
}

fn margin_matrix(parts: &[Partition], zero_one: bool) -> Matrix {
    let mut memo = HashMap::new();
    parts
        .iter()
        .map(|row| {
            parts
                .iter()
                .map(|col| count_matrices(row.parts(), col.parts().to_vec(), zero_one, &mut memo))
                .collect()
        })
        .collect()
}

/// Number of matrices (0/1 or nonnegative integer) with the given row sums and
/// column capacities exactly consumed.
fn count_matrices(
    rows: &[usize],
    mut caps: Vec<usize>,
    zero_one: bool,
    memo: &mut HashMap<(Vec<usize>, Vec<usize>, bool), BigInt>,
) -> BigInt {
    caps.retain(|&c| c > 0);
    caps.sort_unstable();
    if rows.is_empty() {
        return if caps.is_empty() { BigInt::one() } else { BigInt::zero() };
    }
    if rows.iter().sum::<usize>() != caps.iter().sum::<usize>() {
        return BigInt::zero();
    }
    let key = (rows.to_vec(), caps.clone(), zero_one);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    let mut scratch = caps.clone();
    distribute(rows[0], 0, &mut scratch, zero_one, &mut |left| {
        total += count_matrices(&rows[1..], left.to_vec(), zero_one, memo);
    });
    memo.insert(key, total.clone());
    total
}

/// Calls `f` for every way of removing `amount` from `caps[from..]`, at most
/// one unit per column when `zero_one`.
fn distribute(
    amount: usize,
    from: usize,
    caps: &mut Vec<usize>,
    zero_one: bool,
    f: &mut dyn FnMut(&[usize]),
) {
    if amount == 0 {
        f(caps);
        return;
    }
    if from == caps.len() {
        return;
    }
    let most = if zero_one { caps[from].min(1) } else { caps[from] }.min(amount);
    for take in 0..=most {
        caps[from] -= take;
        distribute(amount - take, from + 1, caps, zero_one, f);
        caps[from] += take;
    }
}

/// `s_λ = det(h_{λ_i - i + j})`, expanded into `h` partitions.
fn jacobi_trudi(parts: &[Partition], index: &HashMap<Partition, usize>) -> Matrix {
    let size = parts.len();
    parts
        .iter()
        .map(|lambda| {
            let mut row = vec![BigInt::zero(); size];
            let l = lambda.len();
            let mut used = vec![false; l];
            let mut chosen = Vec::with_capacity(l);
            expand_det(lambda, 0, &mut used, &mut chosen, 1, &mut |degrees, sign| {
                let key = Partition::from_unsorted(degrees.to_vec());
                row[index[&key]] += sign;
            });
            row
        })
        .collect()
}

fn expand_det(
    lambda: &Partition,
    i: usize,
    used: &mut [bool],
    chosen: &mut Vec<usize>,
    sign: i64,
    f: &mut dyn FnMut(&[usize], i64),
) {
    let l = used.len();
    if i == l {
        f(chosen, sign);
        return;
    }
    for j in 0..l {
        if used[j] {
            continue;
        }
        let deg = lambda.part(i) as isize - i as isize + j as isize;
        if deg < 0 {
            continue;
        }
        // Sign of the permutation built column by column: count inversions
        // against columns already used that are larger than j.
        let crossings = used[j + 1..].iter().filter(|&&u| u).count();
        let s = if crossings % 2 == 0 { sign } else { -sign };
        used[j] = true;
        chosen.push(deg as usize);
        expand_det(lambda, i + 1, used, chosen, s, f);
        chosen.pop();
        used[j] = false;
    }
}

pub(crate) fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .map(|(x, brow)| x * &brow[j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

fn invert(m: &Matrix) -> Matrix {
    let n = m.len();
    let mut aug: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> =
                row.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .expect("transition matrix is singular");
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
    }
    aug.into_iter()
        .map(|row| {
            row[n..]
                .iter()
                .map(|x| {
                    assert!(x.is_integer(), "transition inverse is not integral");
                    x.to_integer()
                })
                .collect()
        })
        .collect()
}
