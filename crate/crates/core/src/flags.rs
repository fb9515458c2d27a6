//! Brute-force point counts of nilpotent Hessenberg varieties over prime
//! fields: complete flags `V_1 ⊂ ... ⊂ V_n` of `F_p^n` with
//! `N_μ V_i ⊆ V_{h(i)}`.
//!
//! Subspaces are held as reduced row echelon bases, which are canonical, so
//! every flag is produced exactly once.

use thiserror::Error;

use crate::hessenberg::HessenbergFunction;
use crate::partition::Partition;

/// Largest supported prime.
pub const MAX_PRIME: u32 = 13;
/// Largest supported `p^n`.
pub const MAX_VECTORS: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlagError {
    #[error("partition ({mu}) has weight {weight}, expected {n}")]
    WeightMismatch { mu: Partition, weight: usize, n: usize },
    #[error("{0} is not a prime in [2, {MAX_PRIME}]")]
    BadPrime(u32),
    #[error("F_{p}^{n} has more than {MAX_VECTORS} vectors")]
    TooLarge { p: u32, n: usize },
}

fn check_field(n: usize, p: u32) -> Result<(), FlagError> {
    if !(2..=MAX_PRIME).contains(&p) || (2..p).any(|d| p.is_multiple_of(d)) {
        return Err(FlagError::BadPrime(p));
    }
    let size = (p as u64).checked_pow(n as u32);
    if size.is_none_or(|s| s > MAX_VECTORS) {
        return Err(FlagError::TooLarge { p, n });
    }
    Ok(())
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // a^(p-2) mod p
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

/// Square matrix over `F_p`, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqMatrix {
    p: u32,
    entries: Vec<Vec<u32>>,
}

impl FqMatrix {
    pub fn entries(&self) -> &[Vec<u32>] {
        &self.entries
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        self.entries
            .iter()
            .map(|row| {
                (row.iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>() % self.p as u64)
                    as u32
            })
            .collect()
    }

    pub fn mul(&self, other: &FqMatrix) -> FqMatrix {
        let n = self.entries.len();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        ((0..n)
                            .map(|k| self.entries[i][k] as u64 * other.entries[k][j] as u64)
                            .sum::<u64>()
                            % self.p as u64) as u32
                    })
                    .collect()
            })
            .collect();
        FqMatrix { p: self.p, entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|&x| x == 0)
    }
}

/// Block-diagonal nilpotent matrix with one Jordan block per part of `μ`:
/// within a block, `N e_1 = 0` and `N e_{k+1} = e_k`.
pub fn nilpotent_matrix(mu: &Partition, n: usize, p: u32) -> Result<FqMatrix, FlagError> {
    if mu.weight() != n {
        return Err(FlagError::WeightMismatch { mu: mu.clone(), weight: mu.weight(), n });
    }
    let mut entries = vec![vec![0; n]; n];
    let mut start = 0;
    for &size in mu.parts() {
        for k in 1..size {
            entries[start + k - 1][start + k] = 1;
        }
        start += size;
    }
    Ok(FqMatrix { p, entries })
}

/// A subspace of `F_p^n` given by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    rows: Vec<Vec<u32>>,
}

impl Subspace {
    pub fn zero() -> Self {
        Subspace { rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    fn pivot(row: &[u32]) -> usize {
        row.iter().position(|&x| x != 0).expect("echelon rows are nonzero")
    }

    /// Remainder of `v` after elimination against the basis; zero iff `v`
    /// lies in the subspace.
    fn reduce(&self, v: &[u32], p: u32) -> Vec<u32> {
        let mut v = v.to_vec();
        for row in &self.rows {
            let c = Self::pivot(row);
            let f = v[c];
            if f != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = ((*x as u64 + (p - f) as u64 * r as u64) % p as u64) as u32;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32], p: u32) -> bool {
        self.reduce(v, p).iter().all(|&x| x == 0)
    }

    /// The span of the subspace and `v`, again in reduced echelon form.
    fn extend(&self, v: &[u32], p: u32) -> Subspace {
        let mut w = self.reduce(v, p);
        let Some(c) = w.iter().position(|&x| x != 0) else {
            return self.clone();
        };
        let inv = inv_mod(w[c], p);
        for x in w.iter_mut() {
            *x = (*x as u64 * inv as u64 % p as u64) as u32;
        }
        let mut rows: Vec<Vec<u32>> = self
            .rows
            .iter()
            .map(|row| {
                let f = row[c];
                row.iter()
                    .zip(&w)
                    .map(|(&r, &x)| ((r as u64 + (p - f) as u64 * x as u64) % p as u64) as u32)
                    .collect()
            })
            .collect();
        rows.push(w);
        rows.sort_by_key(|r| Self::pivot(r));
        Subspace { rows }
    }

    /// Representatives of the lines of the quotient `F_p^n / self`: vectors
    /// supported on non-pivot columns whose first nonzero entry is 1.
    fn complement_lines(&self, n: usize, p: u32) -> Vec<Vec<u32>> {
        let pivots: Vec<usize> = self.rows.iter().map(|r| Self::pivot(r)).collect();
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut out = Vec::new();
        for (lead, &col) in free.iter().enumerate() {
            let tail = &free[lead + 1..];
            let count = (p as usize).pow(tail.len() as u32);
            for code in 0..count {
                let mut v = vec![0; n];
                v[col] = 1;
                let mut x = code;
                for &c in tail {
                    v[c] = (x % p as usize) as u32;
                    x /= p as usize;
                }
                out.push(v);
            }
        }
        out
    }
}

/// A complete flag: `spaces[k]` is `V_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqFlag {
    p: u32,
    spaces: Vec<Subspace>,
}

impl FqFlag {
    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// `V_k` for `1 ≤ k ≤ n`.
    pub fn space(&self, k: usize) -> &Subspace {
        &self.spaces[k - 1]
    }

    pub fn len(&self) -> usize {
        self.spaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    /// `X V_i ⊆ V_{h(i)}` for every `i`.
    pub fn is_hessenberg(&self, x: &FqMatrix, h: &HessenbergFunction) -> bool {
        (1..=self.len()).all(|i| {
            let target = self.space(h.at(i));
            self.space(i).basis().iter().all(|v| target.contains(&x.apply(v), self.p))
        })
    }
}

/// Every complete flag of `F_p^n`.
pub fn enumerate_flags(n: usize, p: u32) -> Result<Vec<FqFlag>, FlagError> {
    check_field(n, p)?;
    fn rec(n: usize, p: u32, chain: &mut Vec<Subspace>, out: &mut Vec<FqFlag>) {
        let current = chain.last().cloned().unwrap_or_else(Subspace::zero);
        if current.dim() == n {
            out.push(FqFlag { p, spaces: chain.clone() });
            return;
        }
        for v in current.complement_lines(n, p) {
            chain.push(current.extend(&v, p));
            rec(n, p, chain, out);
            chain.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, p, &mut Vec::with_capacity(n), &mut out);
    Ok(out)
}

/// Number of flags with `N_μ V_i ⊆ V_{h(i)}` over `F_p`.
///
/// The search is sharded by `V_1`. Each condition is tested as soon as
/// `V_{h(i)}` has been chosen, pruning partial flags early.
pub fn count_points(h: &HessenbergFunction, mu: &Partition, p: u32) -> Result<u64, FlagError> {
    let n = h.n();
    check_field(n, p)?;
    let x = nilpotent_matrix(mu, n, p)?;
    let lines = Subspace::zero().complement_lines(n, p);
    Ok(lines
        .iter()
        .map(|v| {
            let mut chain = vec![Subspace::zero().extend(v, p)];
            count_extensions(h, &x, p, &mut chain)
        })
        .sum())
}

fn count_extensions(h: &HessenbergFunction, x: &FqMatrix, p: u32, chain: &mut Vec<Subspace>) -> u64 {
    let n = h.n();
    let k = chain.len();
    // Conditions whose target space is V_k are now decidable.
    let ok = (1..=k).filter(|&i| h.at(i) == k).all(|i| {
        chain[i - 1]
            .basis()
            .iter()
            .all(|v| chain[k - 1].contains(&x.apply(v), p))
    });
    if !ok {
        return 0;
    }
    if k == n {
        return 1;
    }
    let current = chain[k - 1].clone();
    current
        .complement_lines(n, p)
        .iter()
        .map(|v| {
            chain.push(current.extend(v, p));
            let c = count_extensions(h, x, p, chain);
            chain.pop();
            c
        })
        .sum()
}
